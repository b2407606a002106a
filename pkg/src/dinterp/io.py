"""Text file formats: CSV series, whitespace matrices, PGM, manifests.

Floats are written with 17 significant digits so that a write/read round
trip reproduces every value exactly.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import numpy as np

from .domain import DomainField, normalize
from .errors import IoFailure, MalformedInput, ShapeMismatch
from .interp2d import DomainField2D, normalize2d

log = logging.getLogger("dinterp")

NORMALIZATION_WARN = 1e-6


def fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _read_text(path) -> str:
    try:
        return Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"{path}: cannot read: {exc}") from None


def _write_text(path, text: str):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise IoFailure(f"{path}: cannot write: {exc}") from None


# -- CSV -----------------------------------------------------------------

def write_csv(path, header, columns):
    cols = [np.asarray(c) for c in columns]
    lines = [",".join(header)]
    for row in zip(*cols):
        lines.append(",".join(fmt(v) for v in row))
    _write_text(path, "\n".join(lines) + "\n")


def read_csv(path) -> tuple[list[str], np.ndarray]:
    """Parse a numeric CSV with one header line; returns (header, rows)."""
    text = _read_text(path)
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise MalformedInput(f"{path}: empty file")
    header = [h.strip() for h in lines[0][1].split(",")]
    rows = []
    for lineno, ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(header):
            raise MalformedInput(
                f"{path}:{lineno}: expected {len(header)} fields, found {len(cells)}")
        try:
            rows.append([float(c) for c in cells])
        except ValueError:
            raise MalformedInput(f"{path}:{lineno}: non-numeric field in {ln.strip()!r}") from None
    if not rows:
        raise MalformedInput(f"{path}: no data rows")
    data = np.array(rows)
    bad = np.argwhere(~np.isfinite(data))
    if bad.size:
        raise MalformedInput(f"{path}:{bad[0][0] + 2}: non-finite value")
    return header, data


def _column(path, name) -> np.ndarray:
    header, data = read_csv(path)
    idx = header.index(name) if name in header else len(header) - 1
    return data[:, idx]


def write_samples_csv(path, values):
    values = np.asarray(values, dtype=float)
    write_csv(path, ["k", "value"], [np.arange(values.size), values])


def read_samples_csv(path) -> np.ndarray:
    return _column(path, "value")


def write_domain_csv(path, channel, refinement: int):
    channel = np.asarray(channel, dtype=float)
    write_csv(path, ["x", "d"], [np.arange(channel.size) / refinement, channel])


def read_domain_csv(path) -> np.ndarray:
    return _column(path, "d")


# -- matrices and PGM -------------------------------------------------------

def write_matrix(path, m):
    m = np.atleast_2d(np.asarray(m, dtype=float))
    text = "\n".join(" ".join(fmt(v) for v in row) for row in m) + "\n"
    _write_text(path, text)


def read_matrix(path) -> np.ndarray:
    text = _read_text(path)
    rows = []
    for lineno, ln in enumerate(text.splitlines(), start=1):
        if not ln.strip() or ln.lstrip().startswith("#"):
            continue
        try:
            rows.append((lineno, [float(t) for t in ln.split()]))
        except ValueError:
            raise MalformedInput(f"{path}:{lineno}: non-numeric entry in {ln.strip()!r}") from None
    if not rows:
        raise MalformedInput(f"{path}: empty matrix")
    width = len(rows[0][1])
    for lineno, r in rows:
        if len(r) != width:
            raise MalformedInput(f"{path}:{lineno}: row has {len(r)} entries, expected {width}")
    m = np.array([r for _, r in rows])
    if not np.all(np.isfinite(m)):
        raise MalformedInput(f"{path}: non-finite entry")
    return m


def _pgm_tokens(data: bytes, path):
    """Header tokens of a PGM file and the offset where the raster starts."""
    tokens = []
    i = 0
    while len(tokens) < 4:
        while i < len(data) and data[i:i + 1].isspace():
            i += 1
        if i < len(data) and data[i:i + 1] == b"#":
            while i < len(data) and data[i:i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        j = i
        while j < len(data) and not data[j:j + 1].isspace() and data[j:j + 1] != b"#":
            j += 1
        if j == i:
            raise MalformedInput(f"{path}: truncated PGM header")
        tokens.append(data[i:j])
        i = j
    return tokens, i + 1


def read_pgm(path) -> np.ndarray:
    """Read a P2 or P5 graymap, rescaled to [0, 1] by its max level."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise MalformedInput(f"{path}: cannot read: {exc}") from None
    tokens, offset = _pgm_tokens(data, path)
    magic = tokens[0]
    if magic not in (b"P2", b"P5"):
        raise MalformedInput(f"{path}: not a P2/P5 graymap (magic {magic!r})")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise MalformedInput(f"{path}: non-integer PGM header field") from None
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise MalformedInput(f"{path}: invalid PGM header {width}x{height} maxval {maxval}")
    count = width * height
    if magic == b"P5":
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        raster = np.frombuffer(data, dtype=dtype, count=-1, offset=offset)
        if raster.size < count:
            raise MalformedInput(f"{path}: raster has {raster.size} pixels, expected {count}")
        raster = raster[:count]
    else:
        try:
            raster = np.array([int(t) for t in data[offset:].split()[:count]])
        except ValueError:
            raise MalformedInput(f"{path}: non-integer pixel in P2 raster") from None
        if raster.size < count:
            raise MalformedInput(f"{path}: raster has {raster.size} pixels, expected {count}")
    if raster.max(initial=0) > maxval:
        raise MalformedInput(f"{path}: pixel value exceeds maxval {maxval}")
    return raster.reshape(height, width).astype(float) / maxval


def write_pgm(path, m, maxval: int = 255, vmin=None, vmax=None, plain: bool = False):
    """Quantize ``m`` linearly from [vmin, vmax] onto [0, maxval] and write it."""
    m = np.asarray(m, dtype=float)
    if maxval not in (255, 65535):
        raise ValueError("maxval must be 255 or 65535")
    lo = m.min() if vmin is None else vmin
    hi = m.max() if vmax is None else vmax
    scale = maxval / (hi - lo) if hi > lo else 0.0
    q = np.clip(np.rint((m - lo) * scale), 0, maxval).astype(np.int64)
    height, width = q.shape
    header = f"{'P2' if plain else 'P5'}\n{width} {height}\n{maxval}\n".encode()
    if plain:
        body = ("\n".join(" ".join(str(v) for v in row) for row in q) + "\n").encode()
    else:
        body = q.astype(">u2" if maxval > 255 else "u1").tobytes()
    try:
        Path(path).write_bytes(header + body)
    except OSError as exc:
        raise IoFailure(f"{path}: cannot write: {exc}") from None


def read_image(path) -> np.ndarray:
    """Sample matrix from a PGM file or a whitespace-separated text matrix."""
    try:
        with open(path, "rb") as fh:
            magic = fh.read(2)
    except OSError as exc:
        raise MalformedInput(f"{path}: cannot read: {exc}") from None
    if magic in (b"P2", b"P5"):
        return read_pgm(path)
    return read_matrix(path)


# -- manifests and reports --------------------------------------------------

def write_manifest(path, entries: dict):
    _write_text(path, "".join(f"{k}={fmt(v)}\n" for k, v in entries.items()))


def read_manifest(path) -> dict:
    out = {}
    for lineno, ln in enumerate(_read_text(path).splitlines(), start=1):
        if not ln.strip() or ln.startswith("#"):
            continue
        if "=" not in ln:
            raise MalformedInput(f"{path}:{lineno}: expected key=value")
        k, v = ln.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def format_report(report) -> str:
    lines = [f"all_passed={fmt(report.passed)}"]
    for c in report.checks:
        for key in ("passed", "worst_residual", "worst_location", "probes", "vacuous",
                    "tolerance"):
            lines.append(f"{c.name}.{key}={fmt(getattr(c, key))}")
    return "\n".join(lines) + "\n"


# -- domain loading ---------------------------------------------------------

def _warn_if_unnormalized(total, paths):
    dev = float(np.abs(total - 1.0).max())
    if dev > NORMALIZATION_WARN:
        log.warning("domain maps %s do not sum to 1 (max deviation %.3g); normalizing",
                    ", ".join(str(p) for p in paths), dev)


def load_domain_1d(paths, refinement: int, num_samples: int | None = None) -> DomainField:
    """One CSV per subdomain, normalized on load."""
    channels = [read_domain_csv(p) for p in paths]
    expected = None if num_samples is None else (num_samples - 1) * refinement + 1
    first = channels[0].size if expected is None else expected
    for p, ch in zip(paths, channels):
        if ch.size != first:
            raise ShapeMismatch(
                f"{p}: {ch.size} domain values, expected {first}"
                + ("" if num_samples is None else f" for N={num_samples}, R={refinement}"))
    _warn_if_unnormalized(np.sum(channels, axis=0), paths)
    return normalize(channels, refinement)


def load_domain_2d(paths, refinement: int, shape=None) -> DomainField2D:
    """One matrix (text or PGM) per subdomain, normalized on load."""
    maps = [read_image(p) for p in paths]
    expected = maps[0].shape if shape is None else tuple(
        (n - 1) * refinement + 1 for n in shape)
    for p, m in zip(paths, maps):
        if m.shape != expected:
            raise ShapeMismatch(f"{p}: map shape {m.shape}, expected {expected}")
    _warn_if_unnormalized(np.sum(maps, axis=0), paths)
    return normalize2d(maps, refinement)
