"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse
default).  All file formats are owned by the library modules: weight
specs and samples are JSON, sweeps are CSV with a JSON report sidecar.
"""

import argparse
import json
import math
import sys

from . import discovery, harness, sampler
from .branching import extinction_probability, simulate_gw_batch
from .components import component_sizes
from .model import RegimeReport, WeightSpec, build_weights, regime


def _load_spec(path):
    with open(path) as fh:
        return WeightSpec.from_json(json.load(fh))


def _cmd_sample(args):
    w = build_weights(_load_spec(args.spec))
    b = sampler.sample_bipartite(w, args.seed)
    with open(args.out, "w") as fh:
        json.dump(b.to_json(), fh)
    return 0


def _cmd_components(args):
    with open(args.infile) as fh:
        b = sampler.BipartiteSample.from_json(json.load(fh))
    print(json.dumps(component_sizes(b).to_json()))
    return 0


def _cmd_discover(args):
    with open(args.infile) as fh:
        b = sampler.BipartiteSample.from_json(json.load(fh))
    w = build_weights(_load_spec(args.spec))
    trace = discovery.discover(b, w, args.start, max_steps=args.max_steps)
    print("%6s %8s %14s %8s" % ("i", "X_i", "W_i", "|U_i|"))
    for s in trace.steps:
        print("%6d %8d %14.6g %8d"
              % (s.index, s.new_vertex_count, s.attr_weight,
                 s.unsaturated_count))
    print("component_size=%d terminated_at=%d exhausted=%s"
          % (trace.component_size, trace.terminated_at, trace.exhausted))
    return 0


def _cmd_extinction(args):
    w = build_weights(_load_spec(args.spec))
    sol = extinction_probability(w, tol=args.tol)
    print(json.dumps(sol.to_json()))
    return 0


def _cmd_gw_sim(args):
    w = build_weights(_load_spec(args.spec))
    extinct = simulate_gw_batch(w, args.seed, args.runs)
    freq = extinct / args.runs
    stderr = math.sqrt(max(freq * (1.0 - freq), 1e-12) / args.runs)
    print(json.dumps({
        "runs": args.runs, "extinct": extinct,
        "frequency": freq, "stderr": stderr,
    }))
    return 0


def _cmd_sweep(args):
    with open(args.config) as fh:
        cfg = harness.SweepConfig.from_json(json.load(fh))
    records = harness.run_sweep(cfg, workers=args.workers)
    harness.write_csv(records, args.out_csv, timing=args.timing)
    w_top = build_weights(cfg.spec_at(cfg.c_values()[-1]))
    hyp = regime(w_top, cfg.eps_c)
    report = {
        "config": cfg.to_json(),
        "hypotheses": hyp.to_json(),
        "verification": harness.verify_theorems(records, hyp).to_json(),
        "gap_scan": harness.giant_gap_scan(records, cfg.eps_c).to_json(),
    }
    with open(args.out_report, "w") as fh:
        json.dump(report, fh, indent=2)
    return 0


def _cmd_verify(args):
    records = harness.read_csv(args.csv)
    with open(args.hypotheses) as fh:
        hyp = RegimeReport.from_json(json.load(fh))
    report = harness.verify_theorems(records, hyp)
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rigs",
        description="Random intersection graphs: sampling, components, "
                    "branching-process predictions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw one bipartite sample")
    p.add_argument("--spec", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("components", help="component summary of a sample")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("discover", help="trace the discovery process")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--spec", required=True,
                   help="weight spec (needed for the step weights W_i)")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=_cmd_discover)

    p = sub.add_parser("extinction", help="solve the extinction equation")
    p.add_argument("--spec", required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_extinction)

    p = sub.add_parser("gw-sim", help="Monte Carlo extinction frequency")
    p.add_argument("--spec", required=True)
    p.add_argument("--runs", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gw_sim)

    p = sub.add_parser("sweep", help="run a criticality sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--out-report", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true",
                   help="write measured wall_ms (breaks byte determinism)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="check theorems against a sweep CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--hypotheses", required=True,
                   help="regime report JSON for the supercritical family")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry():  # console_scripts target
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
