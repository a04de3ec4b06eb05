"""Procedurally rendered handwritten-style digit corpus.

Offline stand-in with MNIST geometry (1x28x28 uint8, 10 classes, 60k/10k
splits) for machines without dataset files or network access. Generation is
deterministic in the split seed and cached as an .npz under the data root.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw, ImageFilter, ImageFont

TRAIN_SIZE = 60000
TEST_SIZE = 10000
_TRAIN_SEED = 202401
_TEST_SEED = 202402

_FONT_DIR = Path("/usr/share/fonts/truetype/dejavu")
_FONT_FILES = [
    "DejaVuSans.ttf",
    "DejaVuSans-Bold.ttf",
    "DejaVuSerif.ttf",
    "DejaVuSerif-Bold.ttf",
    "DejaVuSansMono.ttf",
    "DejaVuSansMono-Bold.ttf",
]


def _font(path, size):
    if path is None:
        return ImageFont.load_default(size=size)
    return ImageFont.truetype(str(path), size=size)


def _font_paths():
    paths = [p for p in (_FONT_DIR / f for f in _FONT_FILES) if p.exists()]
    return paths or [None]


def render_digit(digit: int, rng: np.random.Generator, fonts=None) -> np.ndarray:
    """One 28x28 uint8 glyph with random font, pose, stroke, and blur."""
    fonts = fonts if fonts is not None else _font_paths()
    size = int(rng.integers(20, 30))
    font = _font(fonts[int(rng.integers(len(fonts)))], size)

    canvas = Image.new("L", (48, 48), 0)
    draw = ImageDraw.Draw(canvas)
    draw.text((24, 24), str(digit), fill=255, font=font, anchor="mm")

    angle = np.radians(rng.uniform(-14.0, 14.0))
    shear = float(rng.uniform(-0.18, 0.18))
    rot = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
    shr = np.array([[1.0, shear], [0.0, 1.0]])
    # PIL wants the inverse map (output -> input), applied about the center
    inv = np.linalg.inv(shr @ rot)
    cx = cy = 24.0
    coeffs = (inv[0, 0], inv[0, 1], cx - inv[0, 0] * cx - inv[0, 1] * cy,
              inv[1, 0], inv[1, 1], cy - inv[1, 0] * cx - inv[1, 1] * cy)
    canvas = canvas.transform((48, 48), Image.AFFINE, coeffs, resample=Image.BILINEAR)

    thick = rng.random()
    if thick < 0.30:
        canvas = canvas.filter(ImageFilter.MaxFilter(3))
    blur = float(rng.uniform(0.0, 0.7))
    if blur > 0.05:
        canvas = canvas.filter(ImageFilter.GaussianBlur(blur))

    arr = np.asarray(canvas)
    ys, xs = np.nonzero(arr > 16)
    if len(ys) == 0:  # degenerate transform wiped the glyph; retry upright
        return render_digit(digit, rng, fonts=[fonts[0]])
    box = arr[ys.min():ys.max() + 1, xs.min():xs.max() + 1]

    # fit the ink into a 20x20 box, keeping aspect, like MNIST preprocessing
    h, w = box.shape
    scale = 20.0 / max(h, w)
    nh, nw = max(1, int(round(h * scale))), max(1, int(round(w * scale)))
    glyph = Image.fromarray(box).resize((nw, nh), Image.BILINEAR)

    out = np.zeros((28, 28), dtype=np.uint8)
    jy = int(rng.integers(-2, 3))
    jx = int(rng.integers(-2, 3))
    top = np.clip((28 - nh) // 2 + jy, 0, 28 - nh)
    left = np.clip((28 - nw) // 2 + jx, 0, 28 - nw)
    g = np.asarray(glyph).astype(np.float32)
    gain = float(rng.uniform(0.85, 1.0)) * 255.0 / max(g.max(), 1.0)
    out[top:top + nh, left:left + nw] = np.clip(g * gain, 0, 255).astype(np.uint8)
    return out


def generate_split(split: str, n: int | None = None, seed: int | None = None):
    """Render a full split; returns (images (n,1,28,28) uint8, labels (n,))."""
    if split == "train":
        n = TRAIN_SIZE if n is None else n
        seed = _TRAIN_SEED if seed is None else seed
    else:
        n = TEST_SIZE if n is None else n
        seed = _TEST_SEED if seed is None else seed
    fonts = _font_paths()
    root_ss = np.random.SeedSequence(seed)
    labels = np.random.default_rng(root_ss.spawn(1)[0]).integers(0, 10, size=n)
    children = root_ss.spawn(n)
    images = np.empty((n, 1, 28, 28), dtype=np.uint8)
    for i in range(n):
        rng = np.random.default_rng(children[i])
        images[i, 0] = render_digit(int(labels[i]), rng, fonts=fonts)
    return images, labels.astype(np.int64)


def load_or_generate(root: Path, split: str):
    """Cached corpus load; renders and caches on first use."""
    root = Path(root) / "synthdigits"
    root.mkdir(parents=True, exist_ok=True)
    cache = root / f"{split}.npz"
    if cache.exists():
        with np.load(cache) as z:
            return z["images"], z["labels"]
    images, labels = generate_split(split)
    tmp = cache.with_suffix(".tmp.npz")
    np.savez_compressed(tmp, images=images, labels=labels)
    tmp.rename(cache)
    return images, labels
