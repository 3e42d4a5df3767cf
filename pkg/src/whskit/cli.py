"""Command line front end.  Every command prints one JSON document on stdout,
compact by default, indented under --pretty.  Exit codes: 0 success, 1 usage
errors (flags, malformed numbers), 2 domain errors (bad weights, wrong
dimensions, caps).

Vertex and simple-root indices are 1-based on the command line, matching how
words and charts are printed; the HTTP API uses 0-based array indices.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bruhat, cluster, kahler, rootsys, whs, wps, wquiver
from .errors import WhskitError
from .service import serve, stringify_big_ints


class Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def comma_ints(text):
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers")


def comma_floats(text):
    try:
        return [float(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated numbers")


def json_matrix(text):
    try:
        m = json.loads(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a JSON matrix")
    if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
        raise argparse.ArgumentTypeError("expected a JSON list of lists")
    return m


def quiver_doc(text):
    """Inline JSON object, or a path to a file holding one."""
    body = text
    if not text.lstrip().startswith("{"):
        try:
            with open(text) as fh:
                body = fh.read()
        except OSError as e:
            raise argparse.ArgumentTypeError(str(e))
    try:
        doc = json.loads(body)
    except ValueError:
        raise argparse.ArgumentTypeError("expected quiver JSON {b, w, frozen}")
    if not isinstance(doc, dict) or "b" not in doc:
        raise argparse.ArgumentTypeError("expected quiver JSON {b, w, frozen}")
    return doc


def levi_indices(levi, n):
    """1-based CLI Levi list to the 0-based J complement convention: the
    --levi flag names the simple roots INSIDE the Levi (I); J is the rest."""
    I = set()
    for v in levi or []:
        I.add(int(v) - 1)
    return [j for j in range(n) if j not in I]


_PRETTY = {"on": False}


def emit(doc):
    doc = stringify_big_ints(doc)
    if _PRETTY["on"]:
        print(json.dumps(doc, indent=2))
    else:
        print(json.dumps(doc, separators=(",", ":")))


def _load_quiver(doc):
    return wquiver.WeightedQuiver(
        doc["b"], doc.get("w") or [0] * len(doc["b"]), doc.get("frozen") or ()
    )


# -- command handlers ---------------------------------------------------------


def cmd_root(args):
    rs = rootsys.build_root_system(args.type)
    doc = {"type": rs.type_name}
    if args.list_roots:
        doc["positive_roots"] = [list(c) for c in rs.pos_roots]
    if args.cartan:
        doc["cartan"] = [list(r) for r in rs.cartan]
        doc["symmetrizer"] = list(rs.d)
    if args.weyl_dim is not None:
        doc["weyl_dim"] = rootsys.weyl_dim(rs, tuple(args.weyl_dim))
    if args.count:
        doc["n_positive"] = rs.n_pos
        doc["weyl_order"] = rs.weyl_order()
    emit(doc)


def cmd_weyl(args):
    rs = rootsys.build_root_system(args.type)
    I = [int(v) - 1 for v in (args.levi or [])]
    doc = {"type": rs.type_name}
    if args.levi:
        doc["levi"] = sorted(int(v) for v in args.levi)
    if args.order:
        doc["order"] = rs.weyl_order()
    if args.poincare:
        doc["poincare"] = bruhat.poincare_polynomial(rs, I)
    if args.reps:
        reps = bruhat.min_coset_reps(rs, I)
        doc["reps"] = [[i + 1 for i in w.word] for w in reps]
    if args.longest:
        w0 = bruhat.longest_element(rs)
        doc["longest"] = [i + 1 for i in w0.word]
        doc["longest_length"] = w0.length
    emit(doc)


def cmd_wps(args):
    if args.wps_cmd == "reduce":
        emit({"reduced": wps.reduce_weights(args.weights)})
    elif args.wps_cmd == "well-formed":
        emit({"well_formed": wps.is_well_formed(args.weights)})
    elif args.wps_cmd == "rays":
        rays = wps.fan_rays(args.weights)
        emit({"rays": [[str(x) for x in ray] for ray in rays]})
    elif args.wps_cmd == "isom":
        res = wps.wps_isomorphic(args.first, args.second)
        doc = {"isomorphic": res["isomorphic"]}
        if res["witness"] is not None:
            phi, sigma = res["witness"]
            doc["phi"] = [list(r) for r in phi]
            doc["perm"] = list(sigma)
        doc["reduced"] = [list(res["reduced"][0]), list(res["reduced"][1])]
        doc["restricted_agrees"] = res["restricted_agrees"]
        emit(doc)


def _space(args):
    rs = rootsys.build_root_system(args.type)
    J = levi_indices(args.levi, rs.n)
    return whs.make_whs(args.type, args.psi, J)


def cmd_whs(args):
    if args.whs_cmd == "degree":
        space = _space(args)
        emit({"degree": whs.extension_degree(space)})
    elif args.whs_cmd == "charts":
        space = _space(args)
        charts = whs.orbifold_charts(space)
        emit(
            {
                "type": space.rs.type_name,
                "psi": list(space.psi),
                "charts": charts,
                "degree": whs.extension_degree(space),
            }
        )
    elif args.whs_cmd == "chern":
        space = _space(args)
        coeffs = whs.chern_coeffs(space, halfsum=args.halfsum)
        emit(
            {
                "coefficients": {
                    str(k): (str(v) if not isinstance(v, int) else v)
                    for k, v in coeffs.items()
                },
                "ample": whs.kahler_cone_check(
                    {k: -v for k, v in coeffs.items()}
                ),
            }
        )
    elif args.whs_cmd == "isom":
        rs = rootsys.build_root_system(args.type)
        J = levi_indices(args.levi, rs.n)
        s1 = whs.make_whs(args.type, args.psi1, J)
        s2 = whs.make_whs(args.type, args.psi2, J)
        res = whs.whs_isomorphic(s1, s2)
        emit(
            {
                "isomorphic": res["isomorphic"],
                "extended_agrees": res["extended_agrees"],
            }
        )
    elif args.whs_cmd == "morphism":
        rs = rootsys.build_root_system(args.type)
        J = levi_indices(args.levi, rs.n)
        s1 = whs.make_whs(args.type, args.psi1, J)
        s2 = whs.make_whs(args.type, args.psi2, J)
        emit({"morphism": whs.whs_morphism_exists(s1, s2)})
    elif args.whs_cmd == "cone":
        emit({"interior": whs.kahler_cone_check(args.coeffs)})
    elif args.whs_cmd == "flag":
        emit({"positive": whs.flag_bundle_check(args.exponents)})


def cmd_cluster(args):
    if args.cluster_cmd == "enumerate":
        seed = cluster.standard_seed(args.type)
        graph = cluster.enumerate_seeds(seed, cap=args.cap)
        emit({"seeds": graph.seed_count, "variables": graph.variable_count})
    elif args.cluster_cmd == "finite-type":
        emit({"verdict": cluster.is_finite_type(args.matrix)})
    elif args.cluster_cmd == "mutate":
        if args.b is None and args.type is None:
            raise WhskitError("cluster mutate needs --type or --b")
        if args.b is not None:
            seed = cluster.Seed.initial(args.b)
        else:
            seed = cluster.standard_seed(args.type)
        trace = [seed.render_variables()]
        for v in args.seq or []:
            seed = seed.mutate(v - 1)
            trace.append(seed.render_variables())
        emit(
            {
                "b": [list(r) for r in seed.b],
                "variables": seed.render_variables(),
                "trace": trace,
            }
        )
    elif args.cluster_cmd == "bipartite":
        rs = rootsys.build_root_system(args.type)
        emit({"b": [list(r) for r in cluster.bipartite_exchange(rs.cartan)]})
    elif args.cluster_cmd == "companion":
        emit(
            {"cartan": [list(r) for r in cluster.cartan_companion(args.matrix)]}
        )


def cmd_quiver(args):
    if args.quiver_cmd == "wmutate":
        q = _load_quiver(args.quiver)
        seq = [v - 1 for v in (args.seq or [])]
        if args.at is not None:
            seq = [args.at - 1] + seq
        out = q.mutate_seq(seq)
        emit(out.to_json())
    elif args.quiver_cmd == "periodic":
        q = _load_quiver(args.quiver)
        if args.t is not None:
            t = tuple(v - 1 for v in args.t)
            sols = wquiver.find_periodic_weights(q, t, args.p, box=args.box)
            emit(
                {
                    "t": [v + 1 for v in t],
                    "p": args.p,
                    "solutions": [list(s) for s in sols],
                }
            )
        else:
            cands = []
            for t in wquiver.candidate_relabelings(q.b, args.p):
                sols = wquiver.find_periodic_weights(q, t, args.p, box=args.box)
                cands.append(
                    {
                        "t": [v + 1 for v in t],
                        "solutions": [list(s) for s in sols],
                    }
                )
            emit({"p": args.p, "candidates": cands})
    elif args.quiver_cmd == "primitive":
        q = wquiver.primitive_quiver(args.n, args.t)
        emit(q.to_json())
    elif args.quiver_cmd == "dynkin":
        rs = rootsys.build_root_system(args.type)
        J = levi_indices(args.levi, rs.n)
        q, report = wquiver.weighted_dynkin_cluster(args.type, args.psi, J)
        emit({"quiver": q.to_json(), "report": report})
    elif args.quiver_cmd == "super":
        q = _load_quiver(args.quiver)
        seed = wquiver.SuperSeed.initial(q)
        seq = [v - 1 for v in (args.seq or [])]
        out = seed.mutate_seq(seq)
        emit({"quiver": out.quiver.to_json(), "z": out.render()})
    elif args.quiver_cmd == "sl3":
        w1, w2, w3 = args.w
        emit(wquiver.sl3_unipotent_report(w1, w2, w3))


def cmd_kahler(args):
    spec = kahler.PotentialSpec(args.group, args.c)
    if args.at is not None:
        pts = [[complex(v) for v in args.at]]
    else:
        pts = kahler.seeded_points(spec.dim, args.samples, args.seed)
    verdicts = []
    min_eig = None
    for z in pts:
        ok, eig = kahler.positivity_check(spec, z)
        verdicts.append(ok)
        min_eig = eig if min_eig is None else min(min_eig, eig)
    emit(
        {
            "posdef": all(verdicts),
            "min_eig": min_eig,
            "group": spec.group + (str(spec.n) if spec.group == "SL" else ""),
            "c": args.c,
            "samples": len(pts),
            "formula": spec.describe(),
        }
    )


def cmd_serve(args):
    serve(args.port, args.persist)


# -- wiring -------------------------------------------------------------------


def build_parser():
    p = Parser(prog="whskit", description=__doc__)
    p.add_argument("--pretty", action="store_true", help="indent the JSON")
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("root", help="root system data")
    q.add_argument("--type", required=True)
    q.add_argument("--list-roots", action="store_true")
    q.add_argument("--cartan", action="store_true")
    q.add_argument("--count", action="store_true")
    q.add_argument("--weyl-dim", type=comma_ints, default=None)
    q.set_defaults(func=cmd_root)

    q = sub.add_parser("weyl", help="Weyl group combinatorics")
    q.add_argument("--type", required=True)
    q.add_argument("--levi", type=comma_ints, default=None)
    q.add_argument("--order", action="store_true")
    q.add_argument("--poincare", action="store_true")
    q.add_argument("--reps", action="store_true")
    q.add_argument("--longest", action="store_true")
    q.set_defaults(func=cmd_weyl)

    q = sub.add_parser("wps", help="weighted projective spaces")
    ws = q.add_subparsers(dest="wps_cmd", required=True)
    w = ws.add_parser("reduce")
    w.add_argument("weights", type=comma_ints)
    w = ws.add_parser("well-formed")
    w.add_argument("weights", type=comma_ints)
    w = ws.add_parser("rays")
    w.add_argument("weights", type=comma_ints)
    w = ws.add_parser("isom")
    w.add_argument("first", type=comma_ints)
    w.add_argument("second", type=comma_ints)
    q.set_defaults(func=cmd_wps)

    q = sub.add_parser("whs", help="weighted homogeneous space invariants")
    hs = q.add_subparsers(dest="whs_cmd", required=True)
    for name in ("degree", "charts", "chern"):
        h = hs.add_parser(name)
        h.add_argument("--type", required=True)
        h.add_argument("--psi", type=comma_ints, required=True)
        h.add_argument("--levi", type=comma_ints, default=None)
        if name == "chern":
            h.add_argument("--halfsum", action="store_true")
    for name in ("isom", "morphism"):
        h = hs.add_parser(name)
        h.add_argument("--type", required=True)
        h.add_argument("--psi1", type=comma_ints, required=True)
        h.add_argument("--psi2", type=comma_ints, required=True)
        h.add_argument("--levi", type=comma_ints, default=None)
    h = hs.add_parser("cone")
    h.add_argument("--coeffs", type=comma_ints, required=True)
    h = hs.add_parser("flag")
    h.add_argument("--exponents", type=comma_ints, required=True)
    q.set_defaults(func=cmd_whs)

    q = sub.add_parser("cluster", help="cluster seeds and mutation")
    cs = q.add_subparsers(dest="cluster_cmd", required=True)
    c = cs.add_parser("enumerate")
    c.add_argument("--type", required=True)
    c.add_argument("--cap", type=int, default=2500)
    c = cs.add_parser("finite-type")
    c.add_argument("--matrix", type=json_matrix, required=True)
    c = cs.add_parser("mutate")
    c.add_argument("--type")
    c.add_argument("--b", type=json_matrix)
    c.add_argument("--seq", type=comma_ints, default=None)
    c = cs.add_parser("bipartite")
    c.add_argument("--type", required=True)
    c = cs.add_parser("companion")
    c.add_argument("--matrix", type=json_matrix, required=True)
    q.set_defaults(func=cmd_cluster)

    q = sub.add_parser("quiver", help="weighted quivers and super seeds")
    qs = q.add_subparsers(dest="quiver_cmd", required=True)
    v = qs.add_parser("wmutate")
    v.add_argument(
        "--quiver",
        type=quiver_doc,
        required=True,
        help="inline JSON or a file path",
    )
    v.add_argument("--at", type=int, default=None)
    v.add_argument("--seq", type=comma_ints, default=None)
    v = qs.add_parser("periodic")
    v.add_argument("--quiver", type=quiver_doc, required=True)
    v.add_argument(
        "--t",
        type=comma_ints,
        default=None,
        help="relabeling; searched when omitted",
    )
    v.add_argument("--p", type=int, default=1)
    v.add_argument("--box", type=int, default=3)
    v = qs.add_parser("primitive")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--t", type=int, required=True)
    v = qs.add_parser("dynkin")
    v.add_argument("--type", required=True)
    v.add_argument("--psi", type=comma_ints, required=True)
    v.add_argument("--levi", type=comma_ints, default=None)
    v = qs.add_parser("super")
    v.add_argument("--quiver", type=quiver_doc, required=True)
    v.add_argument("--seq", type=comma_ints, default=None)
    v = qs.add_parser("sl3")
    v.add_argument("--w", type=comma_ints, required=True)
    q.set_defaults(func=cmd_quiver)

    q = sub.add_parser("kahler", help="numeric positivity of potentials")
    ks = q.add_subparsers(dest="kahler_cmd", required=True)
    k = ks.add_parser("check")
    k.add_argument("--group", required=True, help="sl2, sl3, ..., or sp4")
    k.add_argument("--c", type=comma_floats, required=True)
    k.add_argument("--samples", type=int, default=20)
    k.add_argument("--seed", type=int, default=7)
    k.add_argument("--at", type=comma_floats, default=None)
    k.set_defaults(func=cmd_kahler)

    q = sub.add_parser("serve", help="run the local JSON HTTP service")
    q.add_argument("--port", type=int, default=8787)
    q.add_argument("--persist", default=None)
    q.set_defaults(func=cmd_serve)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _PRETTY["on"] = bool(getattr(args, "pretty", False))
    try:
        args.func(args)
    except WhskitError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
