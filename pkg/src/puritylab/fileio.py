"""Serialization: sweep CSV, the plain-text matrix format and scan JSON.

CSV columns are fixed as

    param,valid,mu12,mu1,mu2,mu_tilde,delta,lhs5,entangled

with numbers printed to 17 significant digits (which round-trips IEEE
doubles exactly), booleans as true/false, blanked columns empty, LF line
endings and UTF-8 throughout.  Identical inputs always serialize to
identical bytes.

The matrix format is line oriented for diffability: a header line "n m"
with the block shape, then one line "row col re im" per entry (0-based
indices, row-major order, all n*m x n*m entries present).
"""

from __future__ import annotations

import json
from dataclasses import asdict

import numpy as np

from .defaults import VALIDATION_TOL
from .density import BlockShape, DensityMatrix, make_density
from .errors import IoError, SpecError
from .sweep import ScanReport, SweepRow

CSV_HEADER = ("param", "valid", "mu12", "mu1", "mu2",
              "mu_tilde", "delta", "lhs5", "entangled")


def format_value(value: float | bool | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return format(value, ".17g")


def csv_lines(rows: list[SweepRow]) -> list[str]:
    lines = [",".join(CSV_HEADER)]
    for row in rows:
        lines.append(",".join(format_value(v) for v in (
            row.param, row.valid, row.mu12, row.mu1, row.mu2,
            row.mu_tilde, row.delta, row.lhs5, row.entangled,
        )))
    return lines


def emit_csv(rows: list[SweepRow], path: str) -> None:
    payload = "\n".join(csv_lines(rows)) + "\n"
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from err


def write_matrix_file(path: str, rho: DensityMatrix) -> None:
    lines = [f"{rho.shape.n} {rho.shape.m}"]
    dim = rho.shape.dim
    for i in range(dim):
        for j in range(dim):
            entry = rho.mat[i, j]
            lines.append(
                f"{i} {j} {format_value(float(entry.real))} "
                f"{format_value(float(entry.imag))}"
            )
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write("\n".join(lines) + "\n")
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from err


def read_matrix_file(path: str, tol: float = VALIDATION_TOL) -> DensityMatrix:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = [line.strip() for line in handle if line.strip()]
    except OSError as err:
        raise IoError(f"cannot read {path}: {err}") from err
    if not raw:
        raise SpecError(f"{path}: empty matrix file")
    head = raw[0].split()
    if len(head) != 2:
        raise SpecError(f"{path}: first line must be 'n m', got {raw[0]!r}")
    try:
        shape = BlockShape(int(head[0]), int(head[1]))
    except ValueError as err:
        raise SpecError(f"{path}: bad shape line {raw[0]!r}") from err
    dim = shape.dim
    if len(raw) - 1 != dim * dim:
        raise SpecError(
            f"{path}: expected {dim * dim} entry lines, got {len(raw) - 1}"
        )
    mat = np.zeros((dim, dim), dtype=np.complex128)
    seen = np.zeros((dim, dim), dtype=bool)
    for line in raw[1:]:
        fields = line.split()
        if len(fields) != 4:
            raise SpecError(f"{path}: bad entry line {line!r}")
        try:
            i, j = int(fields[0]), int(fields[1])
            re, im = float(fields[2]), float(fields[3])
        except ValueError as err:
            raise SpecError(f"{path}: bad entry line {line!r}") from err
        if not (0 <= i < dim and 0 <= j < dim):
            raise SpecError(f"{path}: index ({i}, {j}) out of range for dim {dim}")
        if seen[i, j]:
            raise SpecError(f"{path}: duplicate entry for ({i}, {j})")
        seen[i, j] = True
        mat[i, j] = complex(re, im)
    if not seen.all():
        raise SpecError(f"{path}: missing entries")
    return make_density(mat, shape, tol=tol)


def scan_report_json(report: ScanReport) -> str:
    return json.dumps(asdict(report), indent=2) + "\n"


def write_scan_report(report: ScanReport, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(scan_report_json(report))
    except OSError as err:
        raise IoError(f"cannot write {path}: {err}") from err
