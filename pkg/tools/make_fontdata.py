#!/usr/bin/env python3
"""Regenerate src/cohermark/fontdata.py from a TrueType font.

Dev-only: rasterizes 0-9 and A-Z once (default: the DejaVu Sans build that
matplotlib ships), packs the thresholded bitmaps, and writes them into the
package as frozen data so the runtime has no font dependency and mask areas
stay reproducible everywhere.

Usage: python tools/make_fontdata.py [path/to/font.ttf]
"""

import base64
import sys
import zlib
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw, ImageFont

CHARSET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
EM_PX = 160           # render size; runtime rescales to the canvas
THRESHOLD = 128       # alpha cut for the binary bitmap
PAD = 64


def find_default_font() -> str:
    import matplotlib

    root = Path(matplotlib.get_data_path()) / "fonts" / "ttf"
    return str(root / "DejaVuSans.ttf")


def render_glyph(font, ch):
    size = (EM_PX + 2 * PAD, 2 * EM_PX + 2 * PAD)
    img = Image.new("L", size, 0)
    draw = ImageDraw.Draw(img)
    draw.text((PAD, PAD), ch, fill=255, font=font)
    arr = np.asarray(img) >= THRESHOLD
    ys, xs = np.nonzero(arr)
    if ys.size == 0:
        raise RuntimeError(f"font renders {ch!r} empty")
    bitmap = arr[ys.min():ys.max() + 1, xs.min():xs.max() + 1]
    # offsets relative to the draw origin keep the common baseline
    dx = int(xs.min()) - PAD
    dy = int(ys.min()) - PAD
    advance = font.getlength(ch)
    return bitmap, dx, dy, float(advance)


def main():
    font_path = sys.argv[1] if len(sys.argv) > 1 else find_default_font()
    font = ImageFont.truetype(font_path, EM_PX)

    glyphs = {}
    for ch in CHARSET:
        bitmap, dx, dy, advance = render_glyph(font, ch)
        h, w = bitmap.shape
        packed = np.packbits(bitmap.astype(np.uint8), axis=None).tobytes()
        blob = base64.b85encode(zlib.compress(packed, 9)).decode("ascii")
        glyphs[ch] = (h, w, dx, dy, advance, blob)
        print(f"{ch}: {h}x{w} dx={dx} dy={dy} adv={advance:.1f}")

    out = Path(__file__).resolve().parents[1] / "src" / "cohermark" / "fontdata.py"
    with out.open("w") as fh:
        fh.write('"""Frozen bitmap glyphs for 0-9 and A-Z.\n\n')
        fh.write("Generated by tools/make_fontdata.py (DejaVu Sans rendered at "
                 f"{EM_PX} px em, thresholded at {THRESHOLD}/255); regenerate with that\n"
                 'script if the charset or render size changes.\n"""\n\n')
        fh.write("import base64\nimport zlib\n\nimport numpy as np\n\n")
        fh.write(f"EM_PX = {EM_PX}\n\n")
        fh.write("# char -> (height, width, dx, dy, advance, packed bits)\n")
        fh.write("_GLYPHS = {\n")
        for ch, (h, w, dx, dy, adv, blob) in glyphs.items():
            fh.write(f"    {ch!r}: ({h}, {w}, {dx}, {dy}, {adv!r},\n")
            for i in range(0, len(blob), 88):
                sep = " +" if i + 88 < len(blob) else "),"
                fh.write(f"        {blob[i:i + 88]!r}{sep}\n")
        fh.write("}\n\n")
        fh.write('''SUPPORTED = frozenset(_GLYPHS)

_cache = {}


def glyph_bitmap(ch):
    """Binary bitmap (bool 2-D array) of one supported character."""
    if ch not in _GLYPHS:
        raise KeyError(f"unsupported character: {ch!r}")
    if ch not in _cache:
        h, w, _, _, _, blob = _GLYPHS[ch]
        raw = zlib.decompress(base64.b85decode(blob))
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))
        _cache[ch] = bits[: h * w].reshape(h, w).astype(bool)
    return _cache[ch]


def glyph_metrics(ch):
    """(dx, dy, advance) of one character relative to the draw origin."""
    if ch not in _GLYPHS:
        raise KeyError(f"unsupported character: {ch!r}")
    h, w, dx, dy, adv, _ = _GLYPHS[ch]
    return dx, dy, adv


def compose_text(text):
    """Binary ink bitmap of a string, glyphs advanced along a shared baseline."""
    if not text:
        raise ValueError("text must be non-empty")
    for ch in text:
        if ch not in _GLYPHS:
            raise KeyError(f"unsupported character: {ch!r}")
    placements = []
    pen_x = 0.0
    for ch in text:
        bm = glyph_bitmap(ch)
        dx, dy, adv = glyph_metrics(ch)
        placements.append((int(round(pen_x)) + dx, dy, bm))
        pen_x += adv
    x0 = min(p[0] for p in placements)
    y0 = min(p[1] for p in placements)
    x1 = max(p[0] + p[2].shape[1] for p in placements)
    y1 = max(p[1] + p[2].shape[0] for p in placements)
    canvas = np.zeros((y1 - y0, x1 - x0), dtype=bool)
    for px, py, bm in placements:
        h, w = bm.shape
        canvas[py - y0:py - y0 + h, px - x0:px - x0 + w] |= bm
    return canvas
''')
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
