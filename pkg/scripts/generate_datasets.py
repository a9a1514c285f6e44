#!/usr/bin/env python3
"""Regenerate the reference datasets for the two working regimes.

Produces, in --outdir (default ./datasets):

  strong_drive_couplings.csv   enhanced couplings G1, G2 and supermode
                               frequencies versus the drive phase difference
                               for the squeezing-dominated (f1 >> 1) set
  strong_drive_grid.csv        f1, G1, G2, eta over (lambda1, delta_phi)
  strong_drive_contours.csv    equipotentials f1 = 10, G2 = 0.1, eta = 0.05
  boundary_grid.csv            f1 and the stability margin f2 over
                               (lambda1, delta_phi) for the near-boundary set
  boundary_contours.csv        equipotentials f1 = 10 and f2 = 0
  boundary_resonance.csv       pair-resonance hunt: W1 + W2 vs delta_phi
  laser_threshold.csv          |gp12|, supermode splitting, threshold density
                               and power versus delta_phi (f1 << 1 set)
  phonon_number.csv            stimulated phonon number vs pump density at
                               the threshold dips, at delta_phi = pi, and for
                               the undriven baseline tuned to resonance

Every file is produced through the same pipeline as the CLI; rerunning the
script yields byte-identical output.
"""
import argparse
import math
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sqom import (  # noqa: E402
    GridSpec,
    LaserInput,
    PhysicalParams,
    SweepSpec,
    extract_contours,
    laser_point,
    run_grid,
    run_sweep,
    stage1_transform,
    validate,
)
from sqom.branch_bs import bs_couplings  # noqa: E402
from sqom.sweep import (  # noqa: E402
    LASER_COLUMN_NAMES,
    grid_columns,
    grid_csv_rows,
    laser_rows,
    sweep_columns,
    sweep_csv_rows,
    write_csv,
)

STRONG_DRIVE = PhysicalParams(
    delta1=-4000.0, delta2=4000.0, lambda1=1997.96, lambda2=1997.0,
    j_hop=0.95, g0=0.005, kappa=0.05, gamma_m=0.001,
)
BOUNDARY = PhysicalParams(
    delta1=-400.0, delta2=400.0, lambda1=198.305, lambda2=198.0,
    j_hop=0.3, g0=0.005, kappa=0.05, gamma_m=0.001,
)
LASER = PhysicalParams(
    delta1=20.0, delta2=100.0, lambda1=9.94, lambda2=49.99,
    j_hop=0.1, g0=0.002, kappa=0.05, gamma_m=0.001,
)

TWO_PI = 2.0 * math.pi


def _write(path: Path, rows, columns):
    with open(path, "w", newline="") as fh:
        write_csv(rows, columns, fh)
    print(f"wrote {path} ({len(rows)} rows)")


def _grid_field(rows, spec, name):
    field = np.full((spec.y_steps, spec.x_steps), np.nan)
    for r in rows:
        field[r["y_index"], r["x_index"]] = r[name]
    return field


def _contour_rows(xs, ys, field_name, field, levels):
    cs = extract_contours(xs, ys, field, levels)
    rows = []
    for level in cs.levels:
        for pid, line in enumerate(cs.polylines[level]):
            for vid, (x, y) in enumerate(line):
                rows.append(
                    {"field": field_name, "level": level, "polyline": pid,
                     "vertex": vid, "x": x, "y": y}
                )
    return rows


def strong_drive_datasets(outdir: Path):
    spec = SweepSpec(
        axis="delta_phi", start=0.0, stop=TWO_PI, steps=401,
        outputs=("tms_r", "tms_w1", "tms_w2", "tms_g1", "tms_g2", "tms_eta",
                 "f1", "f2", "branch", "tms_error"),
    )
    rows = run_sweep(STRONG_DRIVE, spec)
    _write(outdir / "strong_drive_couplings.csv", sweep_csv_rows(rows, spec), sweep_columns(spec))

    gspec = GridSpec(
        x_axis="lambda1", x_start=1995.0, x_stop=1999.95, x_steps=101,
        y_axis="delta_phi", y_start=0.0, y_stop=TWO_PI, y_steps=101,
        outputs=("f1", "f2", "tms_g1", "tms_g2", "tms_eta", "branch"),
    )
    grows = run_grid(STRONG_DRIVE, gspec)
    _write(outdir / "strong_drive_grid.csv", grid_csv_rows(grows, gspec), grid_columns(gspec))

    xs, ys = gspec.x_values(), gspec.y_values()
    crows = []
    crows += _contour_rows(xs, ys, "f1", _grid_field(grows, gspec, "f1"), [10.0])
    crows += _contour_rows(xs, ys, "tms_g2", _grid_field(grows, gspec, "tms_g2"), [0.1])
    crows += _contour_rows(xs, ys, "tms_eta", _grid_field(grows, gspec, "tms_eta"), [0.05])
    _write(outdir / "strong_drive_contours.csv", crows,
           ["field", "level", "polyline", "vertex", "x", "y"])


def boundary_datasets(outdir: Path):
    gspec = GridSpec(
        x_axis="lambda1", x_start=197.2, x_stop=199.9, x_steps=109,
        y_axis="delta_phi", y_start=0.0, y_stop=TWO_PI, y_steps=109,
        outputs=("f1", "f2", "branch"),
    )
    grows = run_grid(BOUNDARY, gspec)
    _write(outdir / "boundary_grid.csv", grid_csv_rows(grows, gspec), grid_columns(gspec))

    xs, ys = gspec.x_values(), gspec.y_values()
    crows = []
    crows += _contour_rows(xs, ys, "f1", _grid_field(grows, gspec, "f1"), [10.0])
    crows += _contour_rows(xs, ys, "f2", _grid_field(grows, gspec, "f2"), [0.0])
    _write(outdir / "boundary_contours.csv", crows,
           ["field", "level", "polyline", "vertex", "x", "y"])

    spec = SweepSpec(
        axis="delta_phi", start=0.0, stop=TWO_PI, steps=401,
        outputs=("tms_w1", "tms_w2", "tms_g2", "tms_g12_re", "tms_g12_im",
                 "tms_gp12_abs", "tms_resonance", "f1", "f2", "tms_error"),
    )
    rows = run_sweep(BOUNDARY, spec)
    for row in rows:
        row["w_sum"] = row["tms_w1"] + row["tms_w2"]
    _write(outdir / "boundary_resonance.csv", sweep_csv_rows(rows, spec),
           sweep_columns(spec) + ["w_sum"])


def laser_datasets(outdir: Path):
    spec = SweepSpec(axis="delta_phi", start=0.0, stop=TWO_PI, steps=721)
    rows = run_sweep(LASER, spec)
    _write(outdir / "laser_threshold.csv", laser_rows(rows), LASER_COLUMN_NAMES)

    # stimulated phonon number vs pump density at selected working points
    projected = laser_rows(rows)
    pth = [r["p_threshold"] for r in projected]
    dips = [
        i for i in range(1, len(pth) - 1) if pth[i] < pth[i - 1] and pth[i] < pth[i + 1]
    ]
    working_points = {f"dip_{k}": projected[i]["delta_phi"] for k, i in enumerate(dips)}
    working_points["pi"] = math.pi

    densities = np.geomspace(1e-3, 10.0, 201)
    out_rows = []
    for label, dphi in sorted(working_points.items()):
        vp = validate(LASER.replace(phi_d1=LASER.phi_d2 + dphi))
        c = bs_couplings(stage1_transform(vp), vp)
        for n in densities:
            res = laser_point(
                LaserInput(abs(c.gp12), c.w1, c.w2, n_plus=float(n)),
                vp.omega_m, vp.kappa, vp.gamma_m,
            )
            out_rows.append(
                {"point": label, "delta_phi": dphi, "n_plus": float(n),
                 "gain": res.gain, "n_b": res.n_b, "n_b_capped": res.n_b_capped,
                 "n_threshold": res.n_threshold}
            )
    # undriven baseline: no parametric drives, hopping retuned so the
    # supermode splitting sits exactly on the mechanical resonance
    base = LASER.replace(lambda1=0.0, lambda2=0.0, delta1=20.0, delta2=19.2, j_hop=0.3)
    vb = validate(base)
    cb = bs_couplings(stage1_transform(vb), vb)
    for n in densities:
        res = laser_point(
            LaserInput(abs(cb.gp12), cb.w1, cb.w2, n_plus=float(n)),
            vb.omega_m, vb.kappa, vb.gamma_m,
        )
        out_rows.append(
            {"point": "undriven_baseline", "delta_phi": 0.0, "n_plus": float(n),
             "gain": res.gain, "n_b": res.n_b, "n_b_capped": res.n_b_capped,
             "n_threshold": res.n_threshold}
        )
    _write(outdir / "phonon_number.csv", out_rows,
           ["point", "delta_phi", "n_plus", "gain", "n_b", "n_b_capped", "n_threshold"])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="datasets", type=Path)
    args = parser.parse_args(argv)
    args.outdir.mkdir(parents=True, exist_ok=True)
    strong_drive_datasets(args.outdir)
    boundary_datasets(args.outdir)
    laser_datasets(args.outdir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
