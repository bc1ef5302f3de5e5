import sys
import json
import os
import time
import traceback
from pathlib import Path

# Add src/ to path so 'fullcycle' can be imported
current_dir = os.path.dirname(os.path.abspath(__file__))
src_dir = os.path.dirname(current_dir)
if src_dir not in sys.path:
    sys.path.append(src_dir)

from fullcycle.config import (
    DEFAULT_NODE_LIMIT, DEFAULT_REROUTE_RADIUS, DEFAULT_SEED, DEFAULT_TIME_LIMIT, ORACLE_MAX_ORDER, OUTPUT_DIR, logger,
)
from fullcycle.corpus.store import read_graphs, write_graphs
from fullcycle.exceptions import FullCycleError
from fullcycle.graphs.generators import generate_buckyball, generate_nanotube
from fullcycle.proof.datamodel import SearchBudget
from fullcycle.proof.engine import oracle_check, verify_corpus


def execute(command_data: dict) -> dict:
    """Dispatch one JSON command and return its JSON-ready result."""
    cmd = command_data.get("command")

    if cmd == "generate":
        family = command_data.get("family", "nanotube")
        k = command_data.get("k", 0)
        fmt = command_data.get("format", "planar_code")
        out = command_data.get("out") or os.path.join(OUTPUT_DIR, f"{family}_k{k}.{'pc' if fmt == 'planar_code' else 'json'}")
        graph = generate_nanotube(k) if family == "nanotube" else generate_buckyball()
        path = write_graphs(out, [graph], fmt)
        return {"graph_id": graph.name, "n": graph.n, "f": graph.f, "path": str(path)}

    if cmd == "verify":
        graphs = read_graphs(command_data["input"])
        budget_data = command_data.get("budget", {})
        budget = SearchBudget(
            node_limit=int(budget_data.get("nodes", DEFAULT_NODE_LIMIT)),
            time_limit=float(budget_data.get("secs", DEFAULT_TIME_LIMIT)),
        )
        report = verify_corpus(
            graphs,
            workers=int(command_data.get("workers", 1)),
            forbidden=frozenset(command_data.get("forbid", [])),
            budget=budget,
            radius=int(command_data.get("radius", DEFAULT_REROUTE_RADIUS)),
            seed=int(command_data.get("seed", DEFAULT_SEED)),
        )
        if command_data.get("out"):
            report.write(command_data["out"])
        return report.to_dict()

    if cmd == "oracle_check":
        graphs = read_graphs(command_data["input"])
        report = oracle_check(graphs, int(command_data.get("n_limit", ORACLE_MAX_ORDER)),
                              each_vertex=bool(command_data.get("each_vertex", False)))
        return {
            "passed": report.passed,
            "comparisons": report.comparisons,
            "discrepancies": [d.to_dict() for d in report.discrepancies],
        }

    raise ValueError(f"Unknown command: {cmd}")


def run(argv=None) -> int:
    args = sys.argv[1:] if argv is None else argv
    if len(args) < 2:
        print("Usage: python run_command.py <input.json> <output.json>")
        return 2
    input_file, output_file = args[0], args[1]

    start = time.time()
    if not os.path.exists(input_file):
        result = {"status": "error", "message": f"Input file not found: {input_file}"}
    else:
        try:
            with open(input_file, 'r') as f:
                command_data = json.load(f)
            result = {"status": "success", "result": execute(command_data)}
        except (FullCycleError, ValueError, KeyError) as e:
            logger.error(f"Command failed: {e}")
            result = {"status": "error", "message": str(e)}
        except Exception as e:
            result = {"status": "error", "message": str(e), "traceback": traceback.format_exc()}
    result["elapsed_ms"] = round((time.time() - start) * 1000.0, 3)

    Path(output_file).parent.mkdir(parents=True, exist_ok=True)
    with open(output_file, 'w') as f:
        json.dump(result, f, indent=2)
    return 0 if result["status"] == "success" else 1


if __name__ == "__main__":
    sys.exit(run())
