"""Command-line interface.

Commands: verify, factor, family, trajectory, surface, nullpoints, classify.
Exit codes: 0 all checks passed, 1 check failures, 2 usage or IO errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from gmpy2 import mpq

from . import factor, kinematics, motions, serialize, verify
from .multivector import IdealPointError, Multivector
from .polynomials import (MVPolynomial, NotSpinorError, RealPolynomial,
                          generic_right_zero)
from .scalars import FLOAT, RATIONAL, rat, scalar_to_str


def _parse_tuple(text, n, field=RATIONAL):
    parts = text.split(",")
    if len(parts) != n:
        raise ValueError("expected %d comma-separated values, got %r"
                         % (n, text))
    if field == FLOAT:
        return tuple(float(p) for p in parts)
    return tuple(rat(p.strip()) for p in parts)


def _load_motion(args):
    """Motion from --input JSON or a built-in name."""
    if getattr(args, "input", None):
        with open(args.input) as f:
            return serialize.poly_from_json(json.load(f))
    name = args.motion
    if name == "identity":
        one = Multivector.scalar(1)
        return MVPolynomial([one, Multivector.zero(), one])
    return motions.by_name(name)


def _report_path(out_dir, name):
    return os.path.join(out_dir, name)


def _print_checks(checks):
    for c in checks:
        line = "%-55s %s" % (c["id"], c["status"].upper())
        if c["residual"] is not None and not isinstance(c["residual"], dict):
            line += "  (residual %s)" % c["residual"]
        print(line)


def cmd_verify(args, cfg):
    rep = verify.run_suite(args.suite, cfg)
    _print_checks(rep["checks"])
    path = _report_path(cfg.out_dir, "verify-%s.json" % args.suite)
    serialize.dump_json(rep, path)
    print("report: %s" % path)
    print("suite %s: %s" % (args.suite, "PASS" if rep["pass"] else "FAIL"))
    return 0 if rep["pass"] else 1


def cmd_factor(args, cfg):
    c = _load_motion(args)
    if not c.is_spinor():
        raise NotSpinorError("input polynomial is not a spinor polynomial")
    norm = c.norm_poly()
    m = norm.monic_sqrt()
    if m is None or m.degree() != 2:
        raise ValueError("norm polynomial is not the square of a real "
                         "quadratic; this factorization analysis does not "
                         "apply")
    quotient, r = c.divmod_real(m)
    out = {"norm": [scalar_to_str(v, RATIONAL) for v in norm.coeffs],
           "modulus": [scalar_to_str(v, RATIONAL) for v in m.coeffs],
           "remainder": serialize.poly_to_json(r)}
    if r.degree() >= 1 and not r.coeff(1).is_singular():
        h2 = generic_right_zero(r)
        out["kind"] = "isolated"
        out["h2"] = serialize.mv_to_json(h2)
        out["cofactor"] = serialize.poly_to_json(c.extract_right_factor(h2))
    else:
        cs = factor.build_constraint_system(c)
        lin, residuals = factor.solve_variety(cs)
        out["kind"] = "family"
        out["constraints"] = serialize.constraint_system_to_json(cs)
        out["variety"] = {
            "dimension": lin.dimension,
            "particular": serialize.mv_to_json(lin.h2([0] * lin.dimension)),
            "residuals": [serialize.mpoly_to_json(p, lin.param_names)
                          for p in residuals],
        }
        for name in motions.MOTION_NAMES:
            if c == motions.by_name(name):
                out["named_family"] = name
    path = _report_path(cfg.out_dir, "factor.json")
    serialize.dump_json(out, path)
    print("factorization kind: %s" % out["kind"])
    if out["kind"] == "family":
        print("solution variety dimension: %d, residual equations: %d"
              % (out["variety"]["dimension"],
                 len(out["variety"]["residuals"])))
    print("report: %s" % path)
    return 0


def _family_pair(name, params):
    if name == motions.CIRCULAR_TRANSLATION:
        if len(params) != 2:
            raise ValueError("circular-translation family takes 2 parameters")
        return factor.circular_translation_family(*params)
    if name == motions.VILLARCEAU:
        if len(params) == 2:
            params = factor.villarceau_sphere_point(*params)
        elif len(params) == 3:
            if not factor.on_villarceau_sphere(*params):
                raise ValueError("point %s is not on the solution sphere "
                                 "x^2 + y^2 + (z - 1/4)^2 = 1/16"
                                 % (tuple(map(str, params)),))
        else:
            raise ValueError("villarceau family takes 3 sphere coordinates "
                             "or 2 chart parameters")
        return factor.villarceau_family(*params)
    raise ValueError("unknown family %r" % name)


def cmd_family(args, cfg):
    params = [rat(p) for p in args.params.split(",")]
    h1, h2 = _family_pair(args.motion, params)
    rep = factor.verify_factorization(motions.by_name(args.motion), h1, h2)
    out = serialize.family_to_json(args.motion, params, h1, h2, rep)
    path = _report_path(cfg.out_dir, "family-%s.json" % args.motion)
    serialize.dump_json(out, path)
    print(json.dumps(out, indent=2, sort_keys=True))
    print("report: %s" % path)
    return 0 if rep["pass"] else 1


def _t_values(t_min, t_max, n, field):
    if field == FLOAT:
        return [t_min + (t_max - t_min) * k / (n - 1) for k in range(n)]
    lo = mpq(*float(t_min).as_integer_ratio())
    hi = mpq(*float(t_max).as_integer_ratio())
    return [lo + (hi - lo) * mpq(k, n - 1) for k in range(n)]


def cmd_trajectory(args, cfg):
    c = _load_motion(args)
    field = FLOAT if args.field == "float" else RATIONAL
    point = _parse_tuple(args.point, 3, field)
    if field == FLOAT:
        c = c.to_float()
    traj = kinematics.trajectory_curve(c, point)
    ts = _t_values(args.t_min, args.t_max, args.samples, field)
    samples = traj.sample_many(ts)

    name = args.motion or os.path.basename(args.input)
    lines = ["# trajectory of point %s under motion %s" % (args.point, name),
             "# field=%s samples=%d t in [%s, %s]"
             % (args.field, args.samples, args.t_min, args.t_max),
             "t,x,y,z"]
    n_ideal = 0
    for t, p in samples:
        if p is None:
            n_ideal += 1
            lines.append("# warning: point at infinity at t=%s" % t)
        else:
            lines.append("%s,%s,%s,%s" % ((float(t),) + tuple(map(float, p))))
    path = _report_path(cfg.out_dir, "trajectory.csv")
    serialize.dump_text(lines, path)

    # probe circularity on a few exact rational parameters
    circular_ok = None
    if args.motion in motions.MOTION_NAMES:
        probe = motions.by_name(args.motion)
        pr = kinematics.trajectory_curve(
            probe, _parse_tuple(args.point, 3, RATIONAL))
        pts = []
        for t in (mpq(k, 3) for k in range(-4, 12)):
            try:
                pts.append(pr.sample(t))
            except IdealPointError:
                continue
            if len(pts) == 8:
                break
        circular_ok = all(kinematics.cocircular(list(s))
                          for s in itertools.combinations(pts, 4))
        print("probe samples cocircular (exact): %s" % circular_ok)
    if n_ideal:
        print("warning: %d of %d samples at infinity" % (n_ideal,
                                                         args.samples))
    print("wrote %s" % path)
    if n_ideal == args.samples:
        print("error: every sample was at infinity", file=sys.stderr)
        return 2
    return 0 if circular_ok in (None, True) else 1


def cmd_surface(args, cfg):
    sphere_point = _parse_tuple(args.sphere_point, 3)
    if not factor.on_villarceau_sphere(*sphere_point):
        raise ValueError("--sphere-point must lie on the solution sphere "
                         "x^2 + y^2 + (z - 1/4)^2 = 1/16")
    h1, h2 = factor.villarceau_family(*sphere_point)
    point = _parse_tuple(args.point, 3)
    n = args.resolution

    ts = _t_values(args.t_min, args.t_max, n, RATIONAL)
    grid = kinematics.surface_grid(h1, h2, point, ts, ts)

    # exact cocircularity of parameter lines, probed on 3 rows and columns
    probe_idx = [0, len(ts) // 2, len(ts) - 1] if n >= 4 else [0]
    lines_ok = True
    for i in probe_idx:
        row = [p for p in grid.nodes[i] if p is not None][:4]
        col = [r[i] for r in grid.nodes if r[i] is not None][:4]
        for quad in (row, col):
            if len(quad) == 4:
                lines_ok &= kinematics.cocircular(quad)

    fd = kinematics.second_fundamental_offdiag(
        kinematics.surface_sampler(h1, h2, point),
        [float(t) for t in ts], [float(t) for t in ts], cfg.fd_step)
    fd_ok = fd["max_offdiag"] < cfg.second_form_tol

    header = [
        "# trajectory surface of point %s, sphere point %s"
        % (args.point, args.sphere_point),
        "# grid %dx%d, t in [%s, %s]" % (n, n, args.t_min, args.t_max),
        "# parameter lines cocircular (exact): %s" % lines_ok,
        "# max off-diagonal second fundamental coefficient: %.3e (tol %g)"
        % (fd["max_offdiag"], cfg.second_form_tol),
    ]
    verts, faces, index = [], [], {}
    for i, row in enumerate(grid.nodes):
        for j, p in enumerate(row):
            if p is None:
                continue
            index[(i, j)] = len(verts) + 1
            verts.append("v %.12g %.12g %.12g" % tuple(map(float, p)))
    for i in range(n - 1):
        for j in range(n - 1):
            quad = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            if all(q in index for q in quad):
                faces.append("f %d %d %d %d" % tuple(index[q] for q in quad))
    path = _report_path(cfg.out_dir, "surface.obj")
    serialize.dump_text(header + verts + faces, path)

    print("parameter lines cocircular (exact): %s" % lines_ok)
    print("second fundamental off-diagonal: %.3e (tol %g) -> %s"
          % (fd["max_offdiag"], cfg.second_form_tol,
             "PASS" if fd_ok else "FAIL"))
    if grid.failures:
        print("warning: %d grid nodes at infinity" % len(grid.failures))
    print("wrote %s (%d vertices, %d faces)" % (path, len(verts), len(faces)))
    return 0 if (lines_ok and fd_ok) else 1


def cmd_nullpoints(args, cfg):
    c = _load_motion(args)
    if c.norm_poly() != RealPolynomial([1, 0, 1]) * RealPolynomial([1, 0, 1]):
        raise ValueError("norm polynomial must be (t^2 + 1)^2")
    cc = c.to_complex()
    from .scalars import I
    if cc.evaluate_scalar(I).is_zero():
        out = {"degenerate": True,
               "note": "C(i) = 0: the curve meets the null quadric in no "
                       "isolated points (real polynomial factor)"}
        path = _report_path(cfg.out_dir, "nullpoints.json")
        serialize.dump_json(out, path)
        print("degenerate: C(i) = 0, no null points of interest")
        print("report: %s" % path)
        return 0
    rep = kinematics.null_point_analysis(c, cfg.line_samples)
    out = {
        "n1": serialize.mv_to_json(rep["n1"]),
        "n2": serialize.mv_to_json(rep["n2"]),
        "n1_null": rep["n1_null"],
        "n2_null": rep["n2_null"],
        "secant": [{"t": scalar_to_str(s["t"], RATIONAL),
                    "singular": s["singular"]} for s in rep["secant"]],
        "tangents": [{"at": tg["at"],
                      "samples": [{"t": scalar_to_str(s["t"], RATIONAL),
                                   "singular": s["singular"]}
                                  for s in tg["samples"]]}
                     for tg in rep["tangents"]],
        "secant_all_singular": rep["secant_all_singular"],
        "tangents_all_singular": rep["tangents_all_singular"],
    }
    path = _report_path(cfg.out_dir, "nullpoints.json")
    serialize.dump_json(out, path)
    print("n1 null: %s, n2 null: %s" % (rep["n1_null"], rep["n2_null"]))
    print("secant samples all singular: %s" % rep["secant_all_singular"])
    print("tangent samples all singular: %s" % rep["tangents_all_singular"])
    print("report: %s" % path)
    return 0 if rep["n1_null"] and rep["n2_null"] else 1


def cmd_classify(args, cfg):
    a = serialize.mv_from_json(json.loads(args.a), RATIONAL)
    b = serialize.mv_from_json(json.loads(args.b), RATIONAL)
    cls = kinematics.classify_elementary(a, b)
    print("class: %s" % cls.kind)
    print("witness h*~h = %s" % cls.witness)
    return 0


def build_parser():
    # accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        default=argparse.SUPPRESS,
                        help="JSON file of tolerance/sampling settings")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="random seed override")
    common.add_argument("--out", metavar="DIR", default=argparse.SUPPRESS,
                        help="output directory")
    common.add_argument("--field", choices=("rational", "float"),
                        default=argparse.SUPPRESS,
                        help="scalar field for sampling")
    p = argparse.ArgumentParser(
        prog="spinorfact", parents=[common],
        description="Exact conformal-geometric-algebra toolkit for spinor "
                    "polynomial factorization and its kinematic checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=verify.SUITES)
    sp.set_defaults(func=cmd_verify)

    sp = add_parser("factor",
                        help="factorize a quadratic spinor polynomial")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--motion", choices=motions.MOTION_NAMES)
    g.add_argument("--input", metavar="PATH", help="polynomial JSON file")
    sp.set_defaults(func=cmd_factor)

    sp = add_parser("family", help="evaluate a factorization family")
    sp.add_argument("motion", choices=motions.MOTION_NAMES)
    sp.add_argument("--params", required=True,
                    help="comma-separated rational parameters")
    sp.set_defaults(func=cmd_family)

    sp = add_parser("trajectory", help="sample a trajectory to CSV")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--motion",
                   choices=motions.MOTION_NAMES + ("identity",))
    g.add_argument("--input", metavar="PATH", help="polynomial JSON file")
    sp.add_argument("--point", required=True, help="tracked point x,y,z")
    sp.add_argument("--t-min", type=float, default=-3.0)
    sp.add_argument("--t-max", type=float, default=3.0)
    sp.add_argument("--samples", type=int, default=256)
    sp.set_defaults(func=cmd_trajectory)

    sp = add_parser("surface",
                        help="sample a trajectory surface to OBJ")
    sp.add_argument("--sphere-point", default="0,0,1/2",
                    help="factorization sphere point x,y,z")
    sp.add_argument("--point", default="2,0,0", help="tracked point x,y,z")
    sp.add_argument("--t-min", type=float, default=-2.0)
    sp.add_argument("--t-max", type=float, default=2.0)
    sp.add_argument("--resolution", type=int, default=41)
    sp.set_defaults(func=cmd_surface)

    sp = add_parser("nullpoints",
                        help="null points of the curve and their lines")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--motion",
                   choices=motions.MOTION_NAMES + ("identity",))
    g.add_argument("--input", metavar="PATH", help="polynomial JSON file")
    sp.set_defaults(func=cmd_nullpoints)

    sp = add_parser("classify",
                        help="classify the elementary motion a*t + b")
    sp.add_argument("--a", required=True, help="leading coefficient JSON")
    sp.add_argument("--b", required=True, help="constant coefficient JSON")
    sp.set_defaults(func=cmd_classify)
    return p


def _load_config(args):
    data = {}
    if args.config:
        with open(args.config) as f:
            data = json.load(f)
    cfg = verify.Config.from_dict(data)
    if args.seed is not None:
        cfg.seed = args.seed
    if args.out is not None:
        cfg.out_dir = args.out
    return cfg


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("config", None), ("seed", None),
                          ("out", None), ("field", "rational")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        cfg = _load_config(args)
        return args.func(args, cfg)
    except (ValueError, NotSpinorError, OSError,
            json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
