#!/usr/bin/env python3
"""
sekwl - substructure-enhanced K-hop WL toolkit
Command-line entry point
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import RunConfig, config, get_run_defaults
from src.encoding import EncodingSpec, encode_all, write_features
from src.ego import intersection_array
from src.forward import CombineSpec, MessageSpec, SamplerSpec, jk_readout, run_layers
from src.graph import Graph, GraphId, SPEC_GRAMMAR, dump_graph, generate_with_id, load_graphs, save_graph
from src.harness import (
    count_substructures,
    counting_separation_check,
    discriminate,
    erdos_renyi_corpus,
    theorem1_experiment,
)
from src.refine import ALGORITHM_GRAMMAR, ColorHasher, parse_algorithm, parse_suite, refine, trace_payload
from src.report import (
    HTMLReportGenerator,
    build_payload,
    discrimination_report_data,
    dumps_json,
    dumps_jsonl,
    table_text,
    theorem1_report_data,
    write_text,
)
from src.utils import GraphLoadError, SekwlError, UsageError, WorkerPool

logger = logging.getLogger(__name__)

GENERATED_PREFIX = "gen:"


class SekwlApp:
    """Runs one CLI command with a worker pool sized by --threads"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.hasher = ColorHasher(config.hash_key)
        self.pool = WorkerPool(args.threads, progress=args.progress)

    def run(self) -> int:
        handler = getattr(self, "cmd_" + self.args.command.replace("-", "_"))
        with self.pool:
            return handler()

    # Helpers

    def run_config(self, **extra: Any) -> RunConfig:
        a = self.args
        inputs = [p for p in getattr(a, "graphs", []) if not p.startswith(GENERATED_PREFIX)]
        generators = [p[len(GENERATED_PREFIX):] for p in getattr(a, "graphs", []) if p.startswith(GENERATED_PREFIX)]
        fields: Dict[str, Any] = {
            **get_run_defaults(),
            "command": a.command,
            "inputs": inputs,
            "generators": generators,
            "seed": a.seed,
            "threads": a.threads,
            "output": getattr(a, "output", None),
            "format": getattr(a, "format", "json"),
            "extra": extra,
        }
        for name in ("K", "l", "T", "agg", "radius", "scope", "combine", "alpha", "sampler_cap"):
            if getattr(a, name, None) is not None:
                fields[name] = getattr(a, name)
        return RunConfig(**fields)

    def load(self, ref: str) -> List[Tuple[GraphId, Graph]]:
        if ref.startswith(GENERATED_PREFIX):
            return [generate_with_id(ref[len(GENERATED_PREFIX):], self.args.seed)]
        return load_graphs(ref, getattr(self.args, "input_format", None))

    def load_one(self, ref: str) -> Tuple[GraphId, Graph]:
        graphs = self.load(ref)
        if len(graphs) != 1:
            raise GraphLoadError(ref, f"expected a single graph, found {len(graphs)}")
        return graphs[0]

    def emit(self, kind: str, result: Any, run_config: RunConfig) -> None:
        write_text(dumps_json(build_payload(kind, result, run_config.echo())), getattr(self.args, "output", None))

    # Commands

    def cmd_generate(self) -> int:
        a = self.args
        graph_id, graph = generate_with_id(a.spec, a.seed)
        if a.output:
            save_graph(graph, a.output, a.graph_format)
        else:
            sys.stdout.write(dump_graph(graph, a.graph_format or "el").decode("utf-8"))
        logger.info(f"Generated {graph_id.label}: n={graph.n}, m={graph.m}")
        return 0

    def cmd_encode(self) -> int:
        a = self.args
        graph_id, graph = self.load_one(a.graphs[0])
        spec = EncodingSpec(K=a.K, l=a.l, agg=a.agg, scope=a.scope)
        features = encode_all(graph, spec, self.pool)
        output = a.output or os.path.join(config.output_dir, f"{Path(graph_id.label).stem}.features.csv")
        write_features(features, output, spec, graph_id.to_dict())
        return 0

    def cmd_refine(self) -> int:
        a = self.args
        spec = parse_algorithm(a.algorithm, self._algorithm_defaults())
        traces = []
        for graph_id, graph in self.load(a.graphs[0]):
            result = refine(graph, spec, a.T, hasher=self.hasher, digits=config.quantize_digits, pool=self.pool)
            traces.append({"graph": graph_id.to_dict(), **trace_payload(result, spec.label)})
        run_config = self.run_config(algorithm=spec.label)
        if a.format == "table":
            write_text(table_text([
                {"graph": t["graph"]["label"], "algorithm": t["algorithm"], "stable_at": t["stable_at"],
                 "classes": t["partition_sizes"][-1], "fingerprint": t["fingerprint"]}
                for t in traces
            ]), a.output)
            return 0
        self.emit("refine", traces if len(traces) > 1 else traces[0], run_config)
        return 0

    def cmd_discriminate(self) -> int:
        a = self.args
        id1, g1 = self.load_one(a.graphs[0])
        id2, g2 = self.load_one(a.graphs[1])
        suite = parse_suite(a.suite, self._algorithm_defaults())
        report = discriminate(
            g1, g2, suite, T=a.T, ids=(id1, id2), hasher=self.hasher,
            digits=config.quantize_digits, pool=self.pool,
        ).to_dict()
        run_config = self.run_config(suite=[spec.label for spec in suite])

        if a.html:
            HTMLReportGenerator().save_report(discrimination_report_data(report, run_config.echo()), a.html)
        if a.format == "table":
            rows = [
                {"algorithm": label, "verdict": verdict, "fingerprints": " / ".join(report["fingerprints"][label])}
                for label, verdict in report["verdicts"].items()
            ]
            write_text(table_text(rows), a.output)
        else:
            self.emit("discriminate", report, run_config)
        return 1 if report["dominance_violations"] else 0

    def cmd_count(self) -> int:
        a = self.args
        graph_id, graph = self.load_one(a.graphs[0])
        methods = ["closed_form", "enumerate"] if a.method == "both" else [a.method]
        counts = {
            method: count_substructures(graph, method, config.enumerate_limit).to_dict()
            for method in methods
        }
        result: Dict[str, Any] = {"graph": graph_id.to_dict(), "counts": counts}
        if len(methods) == 2:
            result["agree"] = counts["closed_form"] == counts["enumerate"]
            if not result["agree"]:
                logger.error(f"Counting methods disagree on {graph_id.label}: {counts}")
        if a.format == "table":
            write_text(table_text([{"method": m, **c} for m, c in counts.items()]), a.output)
        else:
            self.emit("count", result, self.run_config(method=a.method))
        return 0 if result.get("agree", True) else 1

    def cmd_theorem1(self) -> int:
        a = self.args
        trials, summary = theorem1_experiment(
            a.n, a.r, a.epsilon, a.trials, a.seed,
            tol=config.separation_tol, threshold=config.theorem1_threshold, pool=self.pool,
        )
        records = [t.to_dict() for t in trials]
        run_config = self.run_config(n=a.n, r=a.r, epsilon=a.epsilon, trials=a.trials)
        if a.trials_out:
            write_text(dumps_jsonl(records), a.trials_out)
        if a.html:
            HTMLReportGenerator().save_report(
                theorem1_report_data(records, summary.to_dict(), run_config.echo()), a.html
            )
        if a.format == "table":
            write_text(table_text([summary.to_dict()]), a.output)
        elif a.format == "jsonl":
            write_text(dumps_jsonl(records + [{"summary": summary.to_dict()}]), a.output)
        else:
            self.emit("theorem1", {"trials": records, "summary": summary.to_dict()}, run_config)
        return 0

    def cmd_intersection_array(self) -> int:
        a = self.args
        graph_id, graph = self.load_one(a.graphs[0])
        array = intersection_array(graph)
        if a.format == "json":
            result = {"graph": graph_id.to_dict(), "distance_regular": array is not None}
            if array is not None:
                result.update(array.to_dict())
                result["intersection_array"] = str(array)
            self.emit("intersection-array", result, self.run_config())
        else:
            write_text((str(array) if array is not None else "not distance-regular") + "\n", a.output)
        return 0

    def cmd_counting_check(self) -> int:
        a = self.args
        corpus = erdos_renyi_corpus(a.size, a.n, a.p, a.seed)
        report = counting_separation_check(
            corpus, a.K, a.l, a.T, agg=a.agg,
            threshold=config.counting_threshold, hasher=self.hasher, pool=self.pool,
        )
        self.emit("counting-check", report.to_dict(), self.run_config(size=a.size, n=a.n, p=a.p))
        return 0

    def cmd_forward(self) -> int:
        a = self.args
        graph_id, graph = self.load_one(a.graphs[0])
        feats = encode_all(graph, EncodingSpec(K=a.radius, l=a.l, agg=a.agg, scope=a.scope), self.pool)
        sampler = SamplerSpec(per_hop_cap=a.sampler_cap, seed=a.seed) if a.sampler_cap else None
        history = run_layers(
            graph, feats, a.layers, a.K,
            combine=CombineSpec(mode=a.combine, alpha=a.alpha, normalize=a.normalize),
            sampler=sampler,
            message=MessageSpec(mode=a.message),
        )
        vector = jk_readout(history, a.jk)
        result = {
            "graph": graph_id.to_dict(),
            "layers": a.layers,
            "widths": [layer[0].width if layer else 0 for layer in history],
            "graph_vector": [float(x) for x in vector],
        }
        self.emit("forward", result, self.run_config(layers=a.layers, jk=a.jk, message=a.message))
        return 0

    def _algorithm_defaults(self) -> Dict[str, Any]:
        a = self.args
        return {"K": a.K, "l": a.l, "agg": a.agg, "radius": a.radius, "scope": a.scope}


def _add_graph_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input-format", choices=["el", "g6"], default=None,
        help="Graph file format; inferred from the extension (.el, .g6) when omitted",
    )


def _add_output(parser: argparse.ArgumentParser, formats: Sequence[str] = ("json",)) -> None:
    parser.add_argument("-o", "--output", default=None, help="Output file (standard output when omitted)")
    parser.add_argument("--format", choices=list(formats), default=formats[0], help="Output format")


def _add_walk_params(parser: argparse.ArgumentParser, scope_default: str) -> None:
    parser.add_argument("--K", type=int, default=config.hops, help="Hop radius")
    parser.add_argument("--l", type=int, default=config.walk_length, help="Random walk length")
    parser.add_argument("--agg", choices=["mean", "sum"], default=config.agg, help="Hop aggregation of walk features")
    parser.add_argument(
        "--radius", type=int, default=config.encoding_radius,
        help="Ego-net radius of the substructure encodings used by sek and subgraph:encoded",
    )
    parser.add_argument("--scope", choices=["graph", "egonet"], default=scope_default, help="Where walks run")


def build_parser() -> argparse.ArgumentParser:
    graph_help = f"Graph file (.el or .g6), or '{GENERATED_PREFIX}<generator spec>'"
    formatter = argparse.ArgumentDefaultsHelpFormatter

    parser = argparse.ArgumentParser(
        prog="sekwl",
        description="Substructure encodings, K-hop WL refinement and expressiveness experiments",
        formatter_class=formatter,
        allow_abbrev=False,
    )
    parser.add_argument("--seed", type=int, default=config.seed, help="Master seed for every random choice")
    parser.add_argument("--threads", type=int, default=config.threads, help="Worker processes")
    parser.add_argument("--progress", action="store_true", help="Draw progress bars on stderr for long experiments")
    parser.add_argument(
        "--log-level", default=config.log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level (logs go to stderr)",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=help_text, description=help_text, formatter_class=formatter, allow_abbrev=False)

    p = add("generate", "Write a generated graph as an edge list or graph6")
    p.add_argument("spec", help=f"Generator spec: {SPEC_GRAMMAR}")
    p.add_argument("-o", "--output", default=None, help="Output file; format follows the extension")
    p.add_argument("--graph-format", choices=["el", "g6"], default=None, help="Override the output format")

    p = add("encode", "Export substructure encodings as CSV plus a JSON sidecar")
    p.add_argument("graphs", nargs=1, metavar="graph", help=graph_help)
    _add_walk_params(p, scope_default="graph")
    p.add_argument("-o", "--output", default=None, help=f"CSV path (default: {config.output_dir}/<graph>.features.csv)")
    _add_graph_format(p)

    p = add("refine", "Run one refinement algorithm and export its trace")
    p.add_argument("graphs", nargs=1, metavar="graph", help=graph_help)
    p.add_argument("--algorithm", default="sek", help=f"Algorithm spec: {ALGORITHM_GRAMMAR}")
    p.add_argument("-T", type=int, default=config.max_rounds, help="Round limit")
    _add_walk_params(p, scope_default=config.encoding_scope)
    _add_output(p, ("json", "table"))
    _add_graph_format(p)

    p = add("discriminate", "Compare two graphs under a suite of refinement algorithms")
    p.add_argument("graphs", nargs=2, metavar="graph", help=graph_help)
    p.add_argument("--suite", default="wl1,khop,sek", help=f"Comma separated algorithm specs: {ALGORITHM_GRAMMAR}")
    p.add_argument("-T", type=int, default=config.max_rounds, help="Round limit")
    _add_walk_params(p, scope_default=config.encoding_scope)
    _add_output(p, ("json", "table"))
    p.add_argument("--html", default=None, help="Also write an HTML summary to this path")
    _add_graph_format(p)

    p = add("count", "Count triangles, tailed triangles, 3-stars and 4-cycles")
    p.add_argument("graphs", nargs=1, metavar="graph", help=graph_help)
    p.add_argument("--method", choices=["closed_form", "enumerate", "both"], default="closed_form", help="Counting method")
    _add_output(p, ("json", "table"))
    _add_graph_format(p)

    p = add("theorem1", "Random-walk separation experiment on random regular graphs")
    p.add_argument("--n", type=int, default=100, help="Nodes per graph")
    p.add_argument("--r", type=int, default=3, help="Degree")
    p.add_argument("--epsilon", type=float, default=0.1, help="Slack in the working radius")
    p.add_argument("--trials", type=int, default=100, help="Number of trials")
    p.add_argument("--trials-out", default=None, help="Also write one JSON line per trial to this path")
    p.add_argument("--html", default=None, help="Also write an HTML summary to this path")
    _add_output(p, ("json", "jsonl", "table"))

    p = add("intersection-array", "Print the intersection array of a distance-regular graph")
    p.add_argument("graphs", nargs=1, metavar="graph", help=graph_help)
    _add_output(p, ("text", "json"))
    _add_graph_format(p)

    p = add("counting-check", "Check that sek fingerprints separate graphs with different substructure counts")
    p.add_argument("--size", type=int, default=50, help="Number of random graphs")
    p.add_argument("--n", type=int, default=12, help="Nodes per graph")
    p.add_argument("--p", type=float, default=0.3, help="Edge probability")
    p.add_argument("-T", type=int, default=config.max_rounds, help="Round limit")
    _add_walk_params(p, scope_default=config.encoding_scope)
    _add_output(p)

    p = add("forward", "Run parameter-free SEK message passing and print the graph vector")
    p.add_argument("graphs", nargs=1, metavar="graph", help=graph_help)
    p.add_argument("--layers", type=int, default=2, help="Number of layers")
    _add_walk_params(p, scope_default=config.encoding_scope)
    p.add_argument("--combine", choices=["sum", "geometric"], default=config.combine, help="Hop combination")
    p.add_argument("--alpha", type=float, default=config.alpha, help="Geometric combine parameter")
    p.add_argument("--normalize", action="store_true", help="Rescale geometric weights to sum to 1")
    p.add_argument("--sampler-cap", type=int, default=config.sampler_cap, help="Per-hop neighbor sample size")
    p.add_argument("--message", choices=["sum", "mean"], default="sum", help="Message aggregation")
    p.add_argument("--jk", choices=["sum", "mean", "concat"], default="concat", help="Jumping knowledge pooling")
    _add_output(p)
    _add_graph_format(p)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )

    try:
        return SekwlApp(args).run()
    except UsageError as e:
        logger.error(str(e))
        print(f"sekwl: usage error: {e}", file=sys.stderr)
        return 2
    except SekwlError as e:
        logger.error(str(e))
        print(f"sekwl: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
