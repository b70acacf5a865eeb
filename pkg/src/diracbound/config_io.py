"""Scenario files and result serialization.

A scenario is a flat JSON document naming one potential model, one Dirac
context, the states to solve, and optional window/tolerance/sweep settings::

    {
      "model":   {"kind": "poschl_teller", "A": 2.09, "B": 1.58, "alpha": 0.3},
      "context": {"m": 10.0, "C": 10.0, "gamma": 0.0, "symmetry": "spin"},
      "states":  [[0, -1], "1p1/2"],
      "window":  {"e_min": -1.0, "e_max": 9.99, "grid_points": 2048},
      "gamma_sweep": {"gamma_min": 0.0, "gamma_max": 2.0, "steps": 21},
      "tolerances": {"root_tol": 1e-10, "ode_tol": 1e-5, "quad_tol": 1e-8}
    }

Unknown keys are rejected with their key path; scenario files double as the
reproducibility record, so parsing is strict and serialize(parse(text))
round-trips the scenario identically.

Result tables are CSV with fixed 12-significant-digit numeric rendering so
identical runs produce byte-identical files.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field

from .potentials import MODEL_KINDS, DiracContext, PotentialModel
from .quantum_numbers import QuantumState, lj_from_kappa, parse_shell_label
from .spectrum import EnergyLevel, SearchWindow

_MODEL_FIELDS = {
    "poschl_teller": ("A", "B", "alpha"),
    "morse": ("D", "beta", "r0"),
    "mie": ("V0", "a"),
    "pseudoharmonic": ("V0", "r0"),
    "kratzer_fues": ("De", "re"),
}

_TOP_KEYS = {"model", "context", "states", "window", "gamma_sweep",
             "tolerances"}


class ScenarioError(ValueError):
    """Malformed scenario document; the message carries the key path."""


@dataclass(frozen=True)
class Tolerances:
    root_tol: float = 1e-10
    ode_tol: float = 1e-5
    quad_tol: float = 1e-8

    def __post_init__(self):
        for name in ("root_tol", "ode_tol", "quad_tol"):
            if getattr(self, name) <= 0:
                raise ScenarioError(f"tolerances.{name} must be positive")


@dataclass(frozen=True)
class Scenario:
    model: PotentialModel
    ctx: DiracContext
    states: tuple[QuantumState, ...]
    window: SearchWindow | None = None
    gamma_sweep: tuple[float, float, int] | None = None
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        if not self.states:
            raise ScenarioError("states must not be empty")


def _require_number(obj, path):
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise ScenarioError(f"{path}: expected a number, got {obj!r}")
    return float(obj)


def _check_keys(mapping, allowed, path):
    if not isinstance(mapping, dict):
        raise ScenarioError(f"{path}: expected an object")
    unknown = set(mapping) - set(allowed)
    if unknown:
        raise ScenarioError(
            f"{path}: unknown key(s) {sorted(unknown)}; allowed: "
            f"{sorted(allowed)}")


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc}") from None
    _check_keys(doc, _TOP_KEYS, "<top level>")
    for key in ("model", "context", "states"):
        if key not in doc:
            raise ScenarioError(f"missing required key {key!r}")

    mdoc = doc["model"]
    _check_keys(mdoc, ("kind",) + tuple(f for fs in _MODEL_FIELDS.values()
                                        for f in fs), "model")
    kind = mdoc.get("kind")
    if kind not in MODEL_KINDS:
        raise ScenarioError(
            f"model.kind: expected one of {sorted(MODEL_KINDS)}, got {kind!r}")
    fields = _MODEL_FIELDS[kind]
    _check_keys(mdoc, ("kind",) + fields, "model")
    params = {}
    for f in fields:
        if f not in mdoc:
            raise ScenarioError(f"model.{f}: missing for kind {kind!r}")
        params[f] = _require_number(mdoc[f], f"model.{f}")
    try:
        model = MODEL_KINDS[kind](**params)
    except ValueError as exc:
        raise ScenarioError(f"model: {exc}") from None

    cdoc = doc["context"]
    _check_keys(cdoc, ("m", "C", "gamma", "symmetry"), "context")
    if "m" not in cdoc:
        raise ScenarioError("context.m: missing")
    symmetry = cdoc.get("symmetry", "spin")
    if symmetry not in ("spin", "pseudospin"):
        raise ScenarioError(
            f"context.symmetry: expected 'spin' or 'pseudospin', got "
            f"{symmetry!r}")
    m = _require_number(cdoc["m"], "context.m")
    if m <= 0:
        raise ScenarioError("context.m must be positive")
    ctx = DiracContext(m=m,
                       C=_require_number(cdoc.get("C", 0.0), "context.C"),
                       gamma=_require_number(cdoc.get("gamma", 0.0),
                                             "context.gamma"),
                       symmetry=symmetry)

    sdoc = doc["states"]
    if not isinstance(sdoc, list) or not sdoc:
        raise ScenarioError("states: expected a non-empty list")
    states = []
    for i, item in enumerate(sdoc):
        path = f"states[{i}]"
        if isinstance(item, str):
            try:
                states.append(parse_shell_label(item))
            except ValueError as exc:
                raise ScenarioError(f"{path}: {exc}") from None
        elif isinstance(item, list) and len(item) == 2:
            n, kappa = item
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise ScenarioError(f"{path}: n must be a non-negative integer")
            if not isinstance(kappa, int) or isinstance(kappa, bool) or kappa == 0:
                raise ScenarioError(f"{path}: kappa must be nonzero")
            states.append(QuantumState(n=n, kappa=kappa))
        else:
            raise ScenarioError(
                f"{path}: expected [n, kappa] or a shell label string")

    window = None
    if "window" in doc:
        wdoc = doc["window"]
        _check_keys(wdoc, ("e_min", "e_max", "grid_points"), "window")
        for f in ("e_min", "e_max"):
            if f not in wdoc:
                raise ScenarioError(f"window.{f}: missing")
        gp = wdoc.get("grid_points", 2048)
        if not isinstance(gp, int) or isinstance(gp, bool):
            raise ScenarioError("window.grid_points: expected an integer")
        try:
            window = SearchWindow(_require_number(wdoc["e_min"], "window.e_min"),
                                  _require_number(wdoc["e_max"], "window.e_max"),
                                  gp)
        except ValueError as exc:
            raise ScenarioError(f"window: {exc}") from None

    sweep = None
    if "gamma_sweep" in doc:
        gdoc = doc["gamma_sweep"]
        _check_keys(gdoc, ("gamma_min", "gamma_max", "steps"), "gamma_sweep")
        for f in ("gamma_min", "gamma_max", "steps"):
            if f not in gdoc:
                raise ScenarioError(f"gamma_sweep.{f}: missing")
        steps = gdoc["steps"]
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < 2:
            raise ScenarioError("gamma_sweep.steps: expected an integer >= 2")
        sweep = (_require_number(gdoc["gamma_min"], "gamma_sweep.gamma_min"),
                 _require_number(gdoc["gamma_max"], "gamma_sweep.gamma_max"),
                 steps)

    tol = Tolerances()
    if "tolerances" in doc:
        tdoc = doc["tolerances"]
        _check_keys(tdoc, ("root_tol", "ode_tol", "quad_tol"), "tolerances")
        tol = Tolerances(
            root_tol=_require_number(tdoc.get("root_tol", 1e-10),
                                     "tolerances.root_tol"),
            ode_tol=_require_number(tdoc.get("ode_tol", 1e-5),
                                    "tolerances.ode_tol"),
            quad_tol=_require_number(tdoc.get("quad_tol", 1e-8),
                                     "tolerances.quad_tol"))

    return Scenario(model=model, ctx=ctx, states=tuple(states),
                    window=window, gamma_sweep=sweep, tolerances=tol)


def serialize_scenario(scn: Scenario) -> str:
    """Canonical JSON for a scenario; parse(serialize(s)) == s."""
    mdoc = {"kind": scn.model.kind}
    for f in _MODEL_FIELDS[scn.model.kind]:
        mdoc[f] = getattr(scn.model, f)
    doc = {
        "model": mdoc,
        "context": {"m": scn.ctx.m, "C": scn.ctx.C, "gamma": scn.ctx.gamma,
                    "symmetry": scn.ctx.symmetry},
        "states": [[s.n, s.kappa] for s in scn.states],
    }
    if scn.window is not None:
        doc["window"] = {"e_min": scn.window.e_min,
                         "e_max": scn.window.e_max,
                         "grid_points": scn.window.grid_points}
    if scn.gamma_sweep is not None:
        doc["gamma_sweep"] = {"gamma_min": scn.gamma_sweep[0],
                              "gamma_max": scn.gamma_sweep[1],
                              "steps": scn.gamma_sweep[2]}
    doc["tolerances"] = {"root_tol": scn.tolerances.root_tol,
                         "ode_tol": scn.tolerances.ode_tol,
                         "quad_tol": scn.tolerances.quad_tol}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# --- result tables --- #

LEVELS_CSV_HEADER = "model,symmetry,n,kappa,ell,j,gamma,energy,residual,method"


def _num(x: float) -> str:
    """Fixed 12-significant-digit rendering."""
    return f"{x:.11e}"


@dataclass(frozen=True)
class LevelRow:
    model_kind: str
    symmetry: str
    gamma: float
    level: EnergyLevel


def format_levels_csv(rows) -> str:
    """Deterministic CSV text for a collection of level rows, sorted by
    (n, kappa, gamma)."""
    lines = [LEVELS_CSV_HEADER]
    ordered = sorted(rows, key=lambda r: (r.level.state.n,
                                          r.level.state.kappa, r.gamma))
    for row in ordered:
        st = row.level.state
        ell, j = lj_from_kappa(st.kappa)
        lines.append(",".join([
            row.model_kind, row.symmetry, str(st.n), str(st.kappa),
            str(ell), f"{j.numerator}/{j.denominator}", _num(row.gamma),
            _num(row.level.energy), _num(row.level.residual),
            row.level.method]))
    return "\n".join(lines) + "\n"


def write_levels_csv(rows, destination) -> None:
    """Write the level table to a path or text stream."""
    text = format_levels_csv(rows)
    if isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__"):
        with open(destination, "w", newline="") as fh:
            fh.write(text)
    else:
        destination.write(text)


def levels_to_json(rows) -> str:
    """JSON export mirroring the CSV fields one-to-one."""
    ordered = sorted(rows, key=lambda r: (r.level.state.n,
                                          r.level.state.kappa, r.gamma))
    out = []
    for row in ordered:
        st = row.level.state
        ell, j = lj_from_kappa(st.kappa)
        out.append({"model": row.model_kind, "symmetry": row.symmetry,
                    "n": st.n, "kappa": st.kappa, "ell": ell,
                    "j": f"{j.numerator}/{j.denominator}",
                    "gamma": _num(row.gamma),
                    "energy": _num(row.level.energy),
                    "residual": _num(row.level.residual),
                    "method": row.level.method})
    return json.dumps(out, indent=2) + "\n"


def format_wavefunction_csv(solution) -> str:
    """CSV text (r, g, f) for a radial solution."""
    buf = io.StringIO()
    buf.write("r,g,f\n")
    for r, g, f in zip(solution.r_grid, solution.g, solution.f):
        buf.write(f"{_num(float(r))},{_num(float(g))},{_num(float(f))}\n")
    return buf.getvalue()
