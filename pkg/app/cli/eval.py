from pathlib import Path

from app.cli.parser import add_common, add_graph_input, add_ranking, setting
from app.core.config import Settings
from app.services import EvaluationService


def handle(settings: Settings) -> int:
    EvaluationService(settings).evaluate()
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="score a run and the greedy baseline against ground truth")
    add_common(parser)
    setting(parser, "--run-dir", "paths", "run_dir", type=Path, help="run to evaluate (default: <output-dir>)")
    add_graph_input(parser)
    setting(parser, "--ground-truth", "paths", "ground_truth_file", type=Path,
            help="ground truth CSV (default: <run-dir>/ground_truth.csv)")
    add_ranking(parser)
    parser.set_defaults(handler=handle)
