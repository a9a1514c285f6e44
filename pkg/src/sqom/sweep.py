"""Single-point analysis, 1-D sweeps and 2-D grids with CSV emission.

Every row is produced by the same `evaluate_point` pipeline (validate ->
stage 1 -> regime -> both second-stage branches -> validity -> laser), so a
sweep row and a single-point analysis of the same parameters agree field by
field. Per-point failures (e.g. the two-mode-squeezing stage refusing) never
abort a sweep: numeric cells keep a NaN sentinel and the typed error name
lands in the matching error column.

CSV conventions: header row, fixed column order (see COLUMNS), '.' decimal
separator, 17 significant digits, 'nan' sentinel, lowercase true/false.
Identical inputs produce byte-identical output.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from . import oracle
from .branch_bs import bs_couplings, rwa_validity_bs
from .branch_tms import rwa_validity_tms, tms_couplings
from .errors import SqomError, TmsUnstable, ZeroCoupling
from .laser import LaserInput, laser_point
from .params import PhysicalParams, validate
from .regime import F1_HI_DEFAULT, F1_LO_DEFAULT, Branch, classify
from .stage1 import stage1_transform
from .validity import RESONANCE_FLOOR_DEFAULT, SMALLNESS_DEFAULT

# Axes accepted by sweeps and grids. delta_phi is virtual: it moves phi_d1
# with phi_d2 held fixed, matching how the phase difference is scanned.
SWEEPABLE_AXES = (
    "delta_phi",
    "delta1",
    "delta2",
    "lambda1",
    "lambda2",
    "phi_d1",
    "phi_d2",
    "j_hop",
    "g0",
    "kappa",
    "gamma_m",
)

_F, _S, _B = "float", "str", "bool"

# (name, kind) in emission order; kind picks the sentinel for failed rows.
COLUMN_SCHEMA: tuple[tuple[str, str], ...] = (
    ("delta_phi", _F),
    ("r_d1", _F),
    ("r_d2", _F),
    ("omega_s1", _F),
    ("omega_s2", _F),
    ("g_s2", _F),
    ("g_p2", _F),
    ("lam1_re", _F),
    ("lam1_im", _F),
    ("lam2_re", _F),
    ("lam2_im", _F),
    ("f_disp", _F),
    ("c_const", _F),
    ("f1", _F),
    ("f2", _F),
    ("f1_degenerate", _B),
    ("branch", _S),
    ("tms_r", _F),
    ("tms_phi", _F),
    ("tms_w1", _F),
    ("tms_w2", _F),
    ("tms_g1", _F),
    ("tms_g2", _F),
    ("tms_g11_re", _F),
    ("tms_g11_im", _F),
    ("tms_g22_re", _F),
    ("tms_g22_im", _F),
    ("tms_g12_re", _F),
    ("tms_g12_im", _F),
    ("tms_gp12_re", _F),
    ("tms_gp12_im", _F),
    ("tms_gp12_abs", _F),
    ("tms_f_prime", _F),
    ("tms_c_prime", _F),
    ("tms_eta", _F),
    ("tms_max_rwa_ratio", _F),
    ("tms_resonance", _B),
    ("tms_error", _S),
    ("bs_theta", _F),
    ("bs_phi", _F),
    ("bs_w1", _F),
    ("bs_w2", _F),
    ("bs_g1", _F),
    ("bs_g2", _F),
    ("bs_g11_re", _F),
    ("bs_g11_im", _F),
    ("bs_g22_re", _F),
    ("bs_g22_im", _F),
    ("bs_g12_re", _F),
    ("bs_g12_im", _F),
    ("bs_gp12_re", _F),
    ("bs_gp12_im", _F),
    ("bs_gp12_abs", _F),
    ("bs_max_rwa_ratio", _F),
    ("bs_resonance", _B),
    ("laser_source", _S),
    ("laser_w1", _F),
    ("laser_w2", _F),
    ("laser_detuning", _F),
    ("laser_gp12_abs", _F),
    ("laser_gain", _F),
    ("laser_n_b", _F),
    ("laser_n_b_capped", _B),
    ("laser_n_threshold", _F),
    ("laser_p_threshold", _F),
    ("laser_error", _S),
    ("error", _S),
)

COLUMNS = tuple(name for name, _ in COLUMN_SCHEMA)

ORACLE_COLUMNS = (
    "oracle_nu1",
    "oracle_nu2",
    "oracle_stable",
    "oracle_freq_dev_lo",
    "oracle_freq_dev_hi",
    "oracle_coeff_defect_tms",
    "oracle_coeff_defect_bs",
    "oracle_metric_defect",
)

# Column projection for the laser-focused sweep (fixed external names).
LASER_SWEEP_COLUMNS = (
    ("delta_phi", "delta_phi"),
    ("w1", "laser_w1"),
    ("w2", "laser_w2"),
    ("detuning", "laser_detuning"),
    ("gp12_abs", "laser_gp12_abs"),
    ("gain", "laser_gain"),
    ("n_b", "laser_n_b"),
    ("n_threshold", "laser_n_threshold"),
    ("p_threshold", "laser_p_threshold"),
    ("branch", "branch"),
    ("f1", "f1"),
    ("error", "error"),
)


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis, inclusive endpoints, `steps` evenly spaced samples."""

    axis: str
    start: float
    stop: float
    steps: int
    outputs: tuple[str, ...] | None = None

    def __post_init__(self):
        _check_axis(self.axis)
        _check_steps(self.steps)
        _check_outputs(self.outputs)

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class GridSpec:
    """Two swept axes; the y axis varies slowest in the emitted rows."""

    x_axis: str
    x_start: float
    x_stop: float
    x_steps: int
    y_axis: str
    y_start: float
    y_stop: float
    y_steps: int
    outputs: tuple[str, ...] = ("f1", "f2", "branch")

    def __post_init__(self):
        _check_axis(self.x_axis)
        _check_axis(self.y_axis)
        if self.x_axis == self.y_axis:
            raise ValueError(f"grid axes must differ, both are {self.x_axis!r}")
        _check_steps(self.x_steps)
        _check_steps(self.y_steps)
        _check_outputs(self.outputs)

    def x_values(self) -> np.ndarray:
        return np.linspace(self.x_start, self.x_stop, self.x_steps)

    def y_values(self) -> np.ndarray:
        return np.linspace(self.y_start, self.y_stop, self.y_steps)


@dataclass(frozen=True)
class PipelineOptions:
    """Knobs shared by every evaluation."""

    f1_hi: float = F1_HI_DEFAULT
    f1_lo: float = F1_LO_DEFAULT
    n_plus: float = 1.0
    n_minus: float = 0.0
    smallness: float = SMALLNESS_DEFAULT
    resonance_floor: float = RESONANCE_FLOOR_DEFAULT


def _check_axis(axis: str):
    if axis not in SWEEPABLE_AXES:
        raise ValueError(f"unknown axis {axis!r}; choose one of {', '.join(SWEEPABLE_AXES)}")


def _check_steps(steps: int):
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")


def _check_outputs(outputs):
    if outputs is None:
        return
    known = set(COLUMNS)
    bad = [o for o in outputs if o not in known]
    if bad:
        raise ValueError(f"unknown output column(s): {', '.join(bad)}")


def apply_axis(params: PhysicalParams, axis: str, value: float) -> PhysicalParams:
    _check_axis(axis)
    if axis == "delta_phi":
        return params.replace(phi_d1=params.phi_d2 + value)
    return params.replace(**{axis: value})


def _blank_row() -> dict:
    row = {}
    for name, kind in COLUMN_SCHEMA:
        row[name] = math.nan if kind == _F else ("" if kind == _S else None)
    return row


def evaluate_point(params: PhysicalParams, opts: PipelineOptions = PipelineOptions()) -> dict:
    """Full pipeline for one parameter set; never raises on physics errors."""
    row = _blank_row()
    try:
        vp = validate(params)
    except SqomError as exc:
        row["error"] = type(exc).__name__
        return row

    row["delta_phi"] = vp.delta_phi
    s = stage1_transform(vp)
    row.update(
        r_d1=s.r_d1,
        r_d2=s.r_d2,
        omega_s1=s.omega_s1,
        omega_s2=s.omega_s2,
        g_s2=s.g_s2,
        g_p2=s.g_p2,
        lam1_re=s.lam1.real,
        lam1_im=s.lam1.imag,
        lam2_re=s.lam2.real,
        lam2_im=s.lam2.imag,
        f_disp=s.f_disp,
        c_const=s.c_const,
    )

    regime = classify(s, vp, f1_hi=opts.f1_hi, f1_lo=opts.f1_lo)
    row.update(
        f1=regime.f1,
        f2=regime.f2,
        f1_degenerate=regime.f1_degenerate,
        branch=regime.branch.value,
    )

    tms = None
    try:
        tms = tms_couplings(s, vp)
    except TmsUnstable as exc:
        row["tms_error"] = type(exc).__name__
    if tms is not None:
        tms_validity = rwa_validity_tms(
            tms, vp.omega_m, smallness=opts.smallness, resonance_floor=opts.resonance_floor
        )
        row.update(
            tms_r=tms.r,
            tms_phi=tms.phi_big,
            tms_w1=tms.w1,
            tms_w2=tms.w2,
            tms_g1=tms.g1,
            tms_g2=tms.g2,
            tms_g11_re=tms.g11.real,
            tms_g11_im=tms.g11.imag,
            tms_g22_re=tms.g22.real,
            tms_g22_im=tms.g22.imag,
            tms_g12_re=tms.g12.real,
            tms_g12_im=tms.g12.imag,
            tms_gp12_re=tms.gp12.real,
            tms_gp12_im=tms.gp12.imag,
            tms_gp12_abs=abs(tms.gp12),
            tms_f_prime=tms.f_prime,
            tms_c_prime=tms.c_prime,
            tms_eta=tms.eta,
            tms_max_rwa_ratio=tms_validity.max_ratio,
            tms_resonance=tms_validity.any_resonance,
        )

    bs = bs_couplings(s, vp)
    bs_validity = rwa_validity_bs(
        bs, vp.omega_m, smallness=opts.smallness, resonance_floor=opts.resonance_floor
    )
    row.update(
        bs_theta=bs.theta,
        bs_phi=bs.phi_big,
        bs_w1=bs.w1,
        bs_w2=bs.w2,
        bs_g1=bs.g1,
        bs_g2=bs.g2,
        bs_g11_re=bs.g11.real,
        bs_g11_im=bs.g11.imag,
        bs_g22_re=bs.g22.real,
        bs_g22_im=bs.g22.imag,
        bs_g12_re=bs.g12.real,
        bs_g12_im=bs.g12.imag,
        bs_gp12_re=bs.gp12.real,
        bs_gp12_im=bs.gp12.imag,
        bs_gp12_abs=abs(bs.gp12),
        bs_max_rwa_ratio=bs_validity.max_ratio,
        bs_resonance=bs_validity.any_resonance,
    )

    # The laser interaction lives on the classified branch; the beam-splitter
    # frame hosts it in the intermediate band too (flagged via laser_source).
    if regime.branch is Branch.TWO_MODE_SQUEEZING:
        source, coup = "tms", tms
    else:
        source, coup = "bs", bs
    row["laser_source"] = source
    if coup is None:
        row["laser_error"] = row["tms_error"]
    else:
        gp12_abs = abs(coup.gp12)
        row.update(
            laser_w1=coup.w1,
            laser_w2=coup.w2,
            laser_detuning=coup.w1 - coup.w2 - vp.omega_m,
            laser_gp12_abs=gp12_abs,
        )
        try:
            res = laser_point(
                LaserInput(
                    gp12_abs=gp12_abs,
                    w1=coup.w1,
                    w2=coup.w2,
                    n_plus=opts.n_plus,
                    n_minus=opts.n_minus,
                ),
                vp.omega_m,
                vp.kappa,
                vp.gamma_m,
            )
        except ZeroCoupling as exc:
            row["laser_error"] = type(exc).__name__
        else:
            row.update(
                laser_gain=res.gain,
                laser_n_b=res.n_b,
                laser_n_b_capped=res.n_b_capped,
                laser_n_threshold=res.n_threshold,
                laser_p_threshold=res.p_threshold,
            )
    return row


def analyze(params: PhysicalParams, opts: PipelineOptions = PipelineOptions()) -> dict:
    """Single-point report: the full pipeline row plus the oracle cross-check."""
    row = evaluate_point(params, opts)
    for name in ORACLE_COLUMNS:
        row[name] = math.nan
    row["oracle_stable"] = None
    if row["error"]:
        return row

    vp = validate(params)
    s = stage1_transform(vp)
    form = oracle.build_photonic_form(vp)
    freqs = oracle.symplectic_frequencies(form)
    row["oracle_nu1"] = freqs.nu1
    row["oracle_nu2"] = freqs.nu2
    row["oracle_stable"] = freqs.stable

    defects = []
    branch = Branch(row["branch"])
    for name, member in (("oracle_coeff_defect_tms", Branch.TWO_MODE_SQUEEZING),
                         ("oracle_coeff_defect_bs", Branch.BEAM_SPLITTER)):
        try:
            report = oracle.rwa_error_report(vp, member, s)
        except TmsUnstable:
            continue
        row[name] = report.coeff_defect
        defects.append(report.metric_defect)
        if member is branch or (branch is Branch.INTERMEDIATE and member is Branch.BEAM_SPLITTER):
            row["oracle_freq_dev_lo"] = report.freq_devs[0].rel_dev
            row["oracle_freq_dev_hi"] = report.freq_devs[1].rel_dev
    if defects:
        row["oracle_metric_defect"] = max(defects)
    return row


def run_sweep(
    params: PhysicalParams,
    spec: SweepSpec,
    opts: PipelineOptions = PipelineOptions(),
) -> list[dict]:
    """One row per axis value.

    The requested (raw) axis value is stored under 'axis_value'; the
    pipeline's own delta_phi column stays canonical in [0, 2*pi), so a sweep
    row agrees with the single-point analysis field by field even at the
    2*pi endpoint.
    """
    rows = []
    for value in spec.values():
        point = apply_axis(params, spec.axis, float(value))
        row = evaluate_point(point, opts)
        row["axis_value"] = float(value)
        rows.append(row)
    return rows


def sweep_columns(spec: SweepSpec) -> list[str]:
    wanted = spec.outputs if spec.outputs is not None else COLUMNS
    return [spec.axis] + [c for c in wanted if c != spec.axis]


def sweep_csv_rows(rows: list[dict], spec: SweepSpec) -> list[dict]:
    """Project sweep rows for emission: the axis column carries the raw
    requested value (so e.g. a delta_phi sweep ends at 2*pi, not at its
    canonical image 0)."""
    out = []
    for row in rows:
        projected = dict(row)
        projected[spec.axis] = row["axis_value"]
        out.append(projected)
    return out


def run_grid(
    params: PhysicalParams,
    spec: GridSpec,
    opts: PipelineOptions = PipelineOptions(),
) -> list[dict]:
    """Dense row-major grid; failed points carry sentinels, never abort.

    Raw axis coordinates are stored under 'x_value'/'y_value' plus the
    integer indices, so the emitted file reconstructs the exact grid
    geometry regardless of any phase canonicalization.
    """
    rows = []
    for yi, y in enumerate(spec.y_values()):
        py = apply_axis(params, spec.y_axis, float(y))
        for xi, x in enumerate(spec.x_values()):
            point = apply_axis(py, spec.x_axis, float(x))
            row = evaluate_point(point, opts)
            row["x_index"] = xi
            row["y_index"] = yi
            row["x_value"] = float(x)
            row["y_value"] = float(y)
            rows.append(row)
    return rows


def grid_columns(spec: GridSpec) -> list[str]:
    head = ["x_index", "y_index", spec.x_axis, spec.y_axis]
    return head + [c for c in spec.outputs if c not in head]


def grid_csv_rows(rows: list[dict], spec: GridSpec) -> list[dict]:
    """Project grid rows for emission: axis-name columns carry the raw
    coordinates."""
    out = []
    for row in rows:
        projected = dict(row)
        projected[spec.x_axis] = row["x_value"]
        projected[spec.y_axis] = row["y_value"]
        out.append(projected)
    return out


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def write_csv(rows: Iterable[dict], columns: list[str], out: TextIO) -> None:
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(format_cell(row.get(c)) for c in columns) + "\n")


def rows_to_csv(rows: Iterable[dict], columns: list[str]) -> str:
    import io

    buf = io.StringIO()
    write_csv(rows, columns, buf)
    return buf.getvalue()


def laser_rows(rows: list[dict]) -> list[dict]:
    """Project full pipeline rows onto the laser sweep's external columns."""
    out = []
    for row in rows:
        projected = {ext: row.get(key) for ext, key in LASER_SWEEP_COLUMNS}
        err = row.get("error") or row.get("laser_error") or ""
        projected["error"] = err
        out.append(projected)
    return out


LASER_COLUMN_NAMES = [ext for ext, _ in LASER_SWEEP_COLUMNS]
