"""Thermal image sequences (data cubes), excitation sequences and windows.

The on-disk container is the TIC1 format: four ASCII header lines
(``TIC1``, ``nx ny nt``, ``te_s``, ``flipped_y``) followed by
``nx * ny * nt`` little-endian IEEE-754 32-bit reals, frame-major,
row-major within a frame. Excitation sequences are stored as one ASCII
``0``/``1`` per line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

import numpy as np

from .errors import (BoundsError, DataError, FormatError, IoError,
                     TruncationError)

MAGIC = b"TIC1"

# 11x11 fault windows: the largest catalogued hole is ~10 px across, so
# half_extent 5 covers every hole with margin.
DEFAULT_WINDOW_HALF_EXTENT = 5


@dataclass(frozen=True)
class FrameWindow:
    """Square pixel window centered on ``center`` spanning
    ``2 * half_extent + 1`` pixels per side. Never clamped: callers must
    supply in-bounds windows."""

    center: tuple[int, int]
    half_extent: int

    def __post_init__(self):
        if self.half_extent < 0:
            raise BoundsError(f"negative half_extent {self.half_extent}")

    @property
    def size(self) -> int:
        return 2 * self.half_extent + 1

    def slices(self, shape: tuple[int, int]) -> tuple[slice, slice]:
        r, c = self.center
        h = self.half_extent
        if r - h < 0 or c - h < 0 or r + h >= shape[0] or c + h >= shape[1]:
            raise BoundsError(
                f"window center={self.center} half_extent={h} exceeds "
                f"frame shape {shape}")
        return slice(r - h, r + h + 1), slice(c - h, c + h + 1)


@dataclass(frozen=True)
class ExcitationSequence:
    """Binary lamp drive pattern; one bit per acquired frame."""

    bits: np.ndarray
    te_s: float

    def __post_init__(self):
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if bits.ndim != 1 or bits.size < 2:
            raise DataError("excitation needs at least two bits")
        if not np.isin(bits, (0, 1)).all():
            raise DataError("excitation bits must be 0/1")
        if bits.min() == bits.max():
            raise DataError("excitation must contain both a 0 and a 1")
        if not self.te_s > 0:
            raise DataError(f"te_s must be positive, got {self.te_s}")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def nt(self) -> int:
        return int(self.bits.size)


@dataclass(frozen=True)
class DataCube:
    """Stack of nt thermal frames of shape (nx, ny), float32 intensities.

    Immutable after construction; all operations return new cubes.
    """

    frames: np.ndarray
    te_s: float
    flipped_y: bool = False

    def __post_init__(self):
        frames = np.ascontiguousarray(self.frames, dtype=np.float32)
        if frames.ndim != 3:
            raise DataError(f"frames must be 3-d (nt, nx, ny), got "
                            f"{frames.ndim}-d")
        nt, nx, ny = frames.shape
        if nt < 1:
            raise DataError("cube needs at least one frame")
        if nx < 8 or ny < 8:
            raise DataError(f"frames must be at least 8x8, got {nx}x{ny}")
        if not np.isfinite(frames).all():
            raise DataError("cube contains non-finite intensities")
        if not self.te_s > 0:
            raise DataError(f"te_s must be positive, got {self.te_s}")
        frames.setflags(write=False)
        object.__setattr__(self, "frames", frames)

    @property
    def nt(self) -> int:
        return int(self.frames.shape[0])

    @property
    def nx(self) -> int:
        return int(self.frames.shape[1])

    @property
    def ny(self) -> int:
        return int(self.frames.shape[2])

    def frame(self, t: int) -> np.ndarray:
        """Frame t as float64 (the working precision of every pipeline)."""
        return self.frames[t].astype(np.float64)


def _format_float(x: float) -> str:
    # repr() of a Python float is the shortest decimal that round-trips
    return repr(float(x))


def write_cube(cube: DataCube, path: str | os.PathLike) -> None:
    """Serialize a cube to TIC1. Validates before any byte is written."""
    if not np.isfinite(cube.frames).all():
        raise DataError("cube contains non-finite intensities")
    header = (f"TIC1\n{cube.nx} {cube.ny} {cube.nt}\n"
              f"{_format_float(cube.te_s)}\n"
              f"{1 if cube.flipped_y else 0}\n").encode("ascii")
    payload = np.ascontiguousarray(
        cube.frames, dtype="<f4").tobytes()
    try:
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(payload)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def read_cube(path: str | os.PathLike) -> DataCube:
    """Parse a TIC1 file; bit-exact inverse of write_cube."""
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc

    parts = blob.split(b"\n", 4)
    if len(parts) < 5 or parts[0] != MAGIC:
        raise FormatError(f"{path}: not a TIC1 file")
    try:
        dims = [int(v) for v in parts[1].split()]
        if len(dims) != 3:
            raise ValueError
        nx, ny, nt = dims
        te_s = float(parts[2])
        flipped = parts[3].strip()
    except ValueError as exc:
        raise FormatError(f"{path}: malformed TIC1 header") from exc
    if flipped not in (b"0", b"1"):
        raise FormatError(f"{path}: flipped_y must be 0 or 1")

    payload = parts[4]
    expected = nx * ny * nt * 4
    if len(payload) != expected:
        raise TruncationError(
            f"{path}: payload holds {len(payload)} bytes, header declares "
            f"{expected}")
    data = np.frombuffer(payload, dtype="<f4").reshape(nt, nx, ny)
    if not np.isfinite(data).all():
        raise DataError(f"{path}: payload contains non-finite values")
    return DataCube(frames=data, te_s=te_s, flipped_y=flipped == b"1")


def flip_y(cube: DataCube) -> DataCube:
    """Mirror every frame about the vertical axis (column order reversed).

    Involution: flip_y(flip_y(c)) == c.
    """
    return replace(cube, frames=cube.frames[:, :, ::-1],
                   flipped_y=not cube.flipped_y)


def extract_window(frame: np.ndarray, win: FrameWindow) -> np.ndarray:
    """Copy the window's pixels out of a single frame."""
    frame = np.asarray(frame)
    if frame.ndim != 2:
        raise DataError("extract_window expects a single 2-d frame")
    rs, cs = win.slices(frame.shape)
    return frame[rs, cs].copy()


def write_excitation(seq: ExcitationSequence, path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write("".join(f"{int(b)}\n" for b in seq.bits))
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def read_excitation(path: str | os.PathLike, te_s: float) -> ExcitationSequence:
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    if not all(ln in ("0", "1") for ln in lines):
        raise FormatError(f"{path}: excitation lines must be 0 or 1")
    bits = np.array([int(ln) for ln in lines], dtype=np.uint8)
    return ExcitationSequence(bits=bits, te_s=te_s)
