"""Command-line front end.

    monohopf <command> --config datum.json [--modulus M] [--samples LIST] [--json] [--cap N]

Commands: classify, cohomology, gal, bigal, verify, predict, paper-examples.
A config is a JSON object (see the shipped fixtures) with keys

    schema_version  1
    datum           {"group": {"cyclic_factors": [...]} | {"cayley_table": [[...]]},
                     "g": exponent vector (or element index for a Cayley table),
                     "chi": {"modulus": L, "values": exponents of zeta_L on the
                             generators (or on every element for a Cayley table)},
                     "mu": scalar}
    modulus         coefficient modulus M (optional)
    samples         list of scalars (optional)
    sigma           {"bicharacter": matrix, "modulus": M} (optional)
    expect          expected values, checked by verify and paper-examples

Scalars are written "0", "-1", "3/4" or "zeta_M^e".  The exit status is 0
only when every check of the command passes.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .cohomology import bicharacter_cocycle, h2, modified_h2
from .cyclotomic import CyclotomicScalar
from .datum import DatumError, classify_type, companion_datum, datum_isomorphic, make_datum
from .galois import SURROGATE_NOTE, default_samples
from .groups import Character, build_group

SCHEMA_VERSION = 1
COMMANDS = ("classify", "cohomology", "gal", "bigal", "verify", "predict", "paper-examples")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    datum: object
    modulus: int
    samples: list
    cap: int
    sigma: object = None
    expect: dict = field(default_factory=dict)
    name: str = ""


_ZETA = re.compile(r"^zeta_(\d+)(?:\^(-?\d+))?$")


def parse_scalar(text, where="scalar"):
    if isinstance(text, int):
        return CyclotomicScalar.from_rational(1, text)
    s = str(text).strip().replace(" ", "")
    m = _ZETA.match(s)
    if m:
        if int(m.group(1)) < 1:
            raise ConfigError(f"{where}: zeta_M needs M >= 1")
        return CyclotomicScalar.root_of_unity(int(m.group(1)), int(m.group(2) or 1))
    try:
        return CyclotomicScalar.from_rational(1, Fraction(s))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{where}: cannot read scalar {text!r}") from None


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ConfigError(f"{where}: missing field '{key}'")
    return obj[key]


def parse_datum(spec, where="datum"):
    gspec = _need(spec, "group", where)
    try:
        G = build_group(gspec)
    except Exception as exc:
        raise ConfigError(f"{where}.group: {exc}") from None
    g = _need(spec, "g", where)
    st = G.abelian_structure
    if isinstance(g, list):
        if st is None or len(g) != len(st.factors):
            raise ConfigError(f"{where}.g: expected an exponent vector of length "
                              f"{len(st.factors) if st else '?'}")
        g = st.element(tuple(int(x) % f for x, f in zip(g, st.factors)))
    elif not isinstance(g, int) or not 0 <= g < G.order:
        raise ConfigError(f"{where}.g: not an element index")
    chi = _need(spec, "chi", where)
    L = _need(chi, "modulus", f"{where}.chi")
    vals = _need(chi, "values", f"{where}.chi")
    if not isinstance(L, int) or L < 1:
        raise ConfigError(f"{where}.chi.modulus: must be a positive integer")
    try:
        if "cayley_table" in gspec:
            character = Character(G, L, [int(v) for v in vals])
        else:
            character = Character.from_generators(G, L, [int(v) for v in vals])
    except Exception as exc:
        raise ConfigError(f"{where}.chi: {exc}") from None
    mu = parse_scalar(spec.get("mu", "0"), f"{where}.mu")
    try:
        return make_datum(G, g, character, mu)
    except DatumError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_config(data, modulus=None, samples=None, cap=None):
    if not isinstance(data, dict):
        raise ConfigError("config: top level must be an object")
    ver = data.get("schema_version")
    if ver != SCHEMA_VERSION:
        raise ConfigError(f"schema_version: expected {SCHEMA_VERSION}, got {ver!r}")
    D = parse_datum(_need(data, "datum", "config"))
    M = modulus or data.get("modulus") or D.default_modulus()
    if not isinstance(M, int) or M < 2:
        raise ConfigError("modulus: must be an integer >= 2")
    if samples is None and "samples" in data:
        samples = [parse_scalar(s, f"samples[{k}]") for k, s in enumerate(data["samples"])]
    sigma = None
    if "sigma" in data:
        sg = data["sigma"]
        form = _need(sg, "bicharacter", "sigma")
        try:
            sigma = bicharacter_cocycle(D.G, int(sg.get("modulus", M)), form)
        except Exception as exc:
            raise ConfigError(f"sigma: {exc}") from None
    return RunConfig(D, M, samples if samples is not None else default_samples(M),
                     cap or 16, sigma, data.get("expect", {}), data.get("name", ""))


def load_config(path, **kw):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_config(data, **kw)


def fixture_names():
    root = resources.files("monohopf") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name, **kw):
    path = resources.files("monohopf") / "fixtures" / f"{name}.json"
    return parse_config(json.loads(path.read_text()), **kw)


# ---------------------------------------------------------------------------
# commands; each returns (report, checks)


def cmd_classify(cfg):
    from .comodule import build_hopf_algebra

    D, M = cfg.datum, cfg.modulus
    T = classify_type(D, M)
    rep = {"datum": D.describe(), "type": T.name, "dim": build_hopf_algebra(D, lazy=True).algebra.dim}
    checks = {"dimension_law": rep["dim"] == D.G.order * D.d}
    if T.note:
        rep["note"] = T.note
    if T.witness is not None:
        rep["witness_table"] = T.witness.table
    if cfg.sigma is not None and T.name in ("III", "IV"):
        D2 = companion_datum(D, cfg.sigma)
        rep["companion"] = D2.describe()
        rep["companion_type"] = classify_type(D2, M).name
        rep["companion_isomorphic"] = datum_isomorphic(D, D2) is not None
    return rep, checks


def cmd_cohomology(cfg):
    D, M, G = cfg.datum, cfg.modulus, cfg.datum.G
    groups = {
        "H2": h2(G, M),
        "H2_{1,g}": modified_h2(G, None, D.g, M),
        "H2_{g,g}": modified_h2(G, D.g, D.g, M),
        "H2_{g^d,g^d}": modified_h2(G, D.g_d, D.g_d, M),
    }
    rep = {"modulus": M, "note": SURROGATE_NOTE,
           "groups": {k: {"invariants": H.invariants, "order": H.order} for k, H in groups.items()}}
    return rep, {}


def cmd_gal(cfg):
    from .galois import enumerate_galois

    E = enumerate_galois(cfg.datum, cfg.modulus, cfg.samples, verify=True, cap=cfg.cap)
    rep = E.describe()
    checks = {"objects_verified": rep["all_verified"]}
    if E.bridge is not None:
        checks["bridge_verified"] = all(v for k, v in E.bridge.items() if isinstance(v, bool))
    return rep, checks


def cmd_bigal(cfg):
    from .bigalois import bigalois_group

    R = bigalois_group(cfg.datum, cfg.modulus, cfg.samples, verify=True, cap=cfg.cap)
    rep = R.describe()
    checks = {"generators_verified": all(all(e.get("certificate", {}).values()) for e in R.generators)}
    if R.bridge is not None:
        checks["bridge_verified"] = all(v for v in R.bridge.values() if isinstance(v, bool))
    if R.reduction is not None:
        checks["reduction_verified"] = bool(R.reduction.get("verified"))
    if cfg.sigma is not None:
        H = R.gamma.H
        coords = H.canonicalize(cfg.sigma.lift(cfg.modulus) if cfg.sigma.modulus != cfg.modulus else cfg.sigma)
        rep["sigma_class"] = list(coords)
        rep["gamma_partners"] = sum(1 for u in R.gamma.aut_g if R.gamma.is_member(u, coords))
    return rep, checks


def cmd_predict(cfg):
    from .special import compare_with_pipeline

    r = compare_with_pipeline(cfg.datum, cfg.modulus, cfg.samples)
    checks = {}
    if r.get("match") is not None:
        checks["prediction_match"] = bool(r["match"])
    return r, checks


def cmd_verify(cfg):
    from .bigalois import gamma_group
    from .comodule import build_hopf_algebra, verify_hopf_axioms

    D = cfg.datum
    rep, checks = cmd_classify(cfg)
    if D.G.order * D.d <= 4 * cfg.cap:
        ax = verify_hopf_axioms(build_hopf_algebra(D))
        rep["hopf_axioms"] = ax
        checks["hopf_axioms"] = ax["all"]
    g_rep, g_checks = cmd_gal(cfg)
    rep["gal"] = {k: g_rep[k] for k in ("branches", "all_verified")}
    checks.update(g_checks)
    if not D.has_mu:
        Gm = gamma_group(D, cfg.modulus)
        if Gm.order <= 256:
            checks["gamma_group_law"] = Gm.check_group_law()
        rep["gamma"] = Gm.summary()
    p_rep, p_checks = cmd_predict(cfg)
    rep["prediction"] = p_rep
    checks.update(p_checks)
    if cfg.expect:
        exp = _fixture_checks(cfg)
        rep["expectations"] = exp
        checks.update({f"expect:{k}": v["ok"] for k, v in exp.items()})
    return rep, checks


def _fixture_checks(cfg):
    """Run the pipelines an expectation needs and compare."""
    from .bigalois import twisted_gamma_map, gamma_group
    from .comodule import build_hopf_algebra, verify_hopf_axioms
    from .galois import enumerate_galois
    from .special import compare_with_pipeline, omega_iso

    D, M, ex = cfg.datum, cfg.modulus, cfg.expect
    got = {}
    T = classify_type(D, M)
    got["type"] = T.name
    got["dim"] = build_hopf_algebra(D, lazy=True).algebra.dim
    if "hopf_axioms" in ex:
        got["hopf_axioms"] = verify_hopf_axioms(build_hopf_algebra(D))["all"]
    if {"gal_classes", "gal_verified", "gal_branches"} & ex.keys():
        E = enumerate_galois(D, M, cfg.samples, verify="gal_verified" in ex, cap=cfg.cap)
        got["gal_branches"] = {k: v["invariants"] for k, v in E.branches.items()}
        got["gal_classes"] = sum(v["classes"] for v in E.branches.values())
        if "gal_verified" in ex:
            got["gal_verified"] = all(o.verified for o in E.objects)
    if {"gamma_order", "gamma_invariants", "gamma_partners"} & ex.keys():
        Gm = gamma_group(D, M)
        got["gamma_order"] = Gm.order
        if "gamma_invariants" in ex:
            got["gamma_invariants"] = Gm.summary().get("invariants")
        if "gamma_partners" in ex:
            coords = Gm.H.canonicalize(cfg.sigma)
            got["gamma_partners"] = sum(1 for u in Gm.aut_g if Gm.is_member(u, coords))
    if "bridge_verified" in ex:
        from .galois import bridge_report

        b = bridge_report(D, cap=cfg.cap)
        got["bridge_verified"] = all(v for v in b.values() if isinstance(v, bool))
    if "prediction_match" in ex:
        got["prediction_match"] = bool(compare_with_pipeline(D, M, cfg.samples)["match"])
    if "omega_verified" in ex:
        got["omega_verified"] = omega_iso(D, M)["verified"]
    if {"companion_type", "companion_isomorphic", "twisted_gamma_verified"} & ex.keys():
        D2 = companion_datum(D, cfg.sigma)
        got["companion_type"] = classify_type(D2, M).name
        got["companion_isomorphic"] = datum_isomorphic(D, D2) is not None
        if "twisted_gamma_verified" in ex:
            w = classify_type(D2, M).witness
            got["twisted_gamma_verified"] = bool(twisted_gamma_map(D2, w, M)[3].get("verified"))
    return {k: {"expected": v, "got": got.get(k), "ok": got.get(k) == v} for k, v in ex.items()}


def cmd_paper_examples(cfg=None, names=None):
    names = names or fixture_names()
    rep, checks = {}, {}
    for name in names:
        fcfg = load_fixture(name)
        if cfg is not None and cfg.cap:
            fcfg.cap = cfg.cap
        res = _fixture_checks(fcfg)
        rep[name] = res
        for k, v in res.items():
            checks[f"{name}:{k}"] = v["ok"]
    return rep, checks


HANDLERS = {
    "classify": cmd_classify,
    "cohomology": cmd_cohomology,
    "gal": cmd_gal,
    "bigal": cmd_bigal,
    "verify": cmd_verify,
    "predict": cmd_predict,
}


def run(cfg, command):
    """Report dict for a command; 'ok' is True when every check passed."""
    if command == "paper-examples":
        rep, checks = cmd_paper_examples(cfg)
    elif command in HANDLERS:
        rep, checks = HANDLERS[command](cfg)
    else:
        raise ConfigError(f"unknown command {command!r}")
    return {"schema_version": SCHEMA_VERSION, "command": command, "report": rep,
            "checks": checks, "ok": all(checks.values())}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _human(out):
    lines = [f"{out['command']}: {'ok' if out['ok'] else 'FAILED'}"]

    def walk(obj, indent):
        for k, v in obj.items():
            if isinstance(v, dict) and v:
                lines.append(" " * indent + f"{k}:")
                walk(v, indent + 2)
            else:
                lines.append(" " * indent + f"{k}: {json.dumps(v, sort_keys=True)}")

    walk(out["report"], 2)
    if out["checks"]:
        lines.append("  checks:")
        for k in sorted(out["checks"]):
            lines.append(f"    {'PASS' if out['checks'][k] else 'FAIL'} {k}")
    return "\n".join(lines)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="monohopf", description="Monomial Hopf algebra toolkit")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="datum config (JSON) or the name of a shipped fixture")
    ap.add_argument("--modulus", type=int, help="coefficient modulus M")
    ap.add_argument("--samples", help="comma-separated scalars, e.g. 0,1,-1,zeta_4")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--cap", type=int, help="dimension cap for the linear-algebra Galois test")
    args = ap.parse_args(argv)
    try:
        samples = None
        if args.samples:
            samples = [parse_scalar(s, f"--samples[{k}]") for k, s in enumerate(args.samples.split(","))]
        kw = {"modulus": args.modulus, "samples": samples, "cap": args.cap}
        cfg = None
        if args.config:
            if args.config in fixture_names():
                cfg = load_fixture(args.config, **kw)
            else:
                cfg = load_config(args.config, **kw)
        elif args.command != "paper-examples":
            ap.error("--config is required")
        out = _jsonable(run(cfg, args.command))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(_human(out))
    return 0 if out["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
