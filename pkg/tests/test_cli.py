import json
import logging

import pandas as pd
import pytest

from app.core.config import load_settings
from app.main import main
from app.repositories import GraphRepository, ManifestRepository, sha256_of

SMALL_TRAIN = ["--epochs", "20", "--batch-size", "6", "--latent-dim", "4", "--hidden-adj", "8", "--hidden-attr", "4"]
SMALL_RUN = SMALL_TRAIN + ["--eps", "0.5", "--min-pts", "2", "--k", "3", "--m", "2", "--bins", "5"]
SMALL_BLOCKS = ["--num-blocks", "1", "--block-size", "10", "--hashtags-per-block", "3",
                "--adj-density", "0.6", "--attr-density", "0.6"]


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def manifest_of(run_dir):
    repo = ManifestRepository()
    return repo.load(repo.path(run_dir))


def run_args(inputs, out, *extra):
    edges, attrs = inputs
    return ["run", "--edge-file", str(edges), "--attribute-file", str(attrs), "--output-dir", str(out),
            *SMALL_RUN, *extra]


@pytest.fixture
def clean_graph(tmp_path):
    out = tmp_path / "clean"
    code = main(["generate", "--nodes", "60", "--attributes", "12", "--edge-p", "0.05", "--attr-p", "0.1",
                 "--output-dir", str(out)])
    assert code == 0
    return out / "graph.json"


class TestExitCodes:
    def test_ingest(self, tiny_inputs, tmp_path):
        edges, attrs = tiny_inputs
        out = tmp_path / "run"
        assert main(["ingest", "--edge-file", str(edges), "--attribute-file", str(attrs), "--output-dir", str(out)]) == 0
        g = GraphRepository().load_graph(out / "graph.json")
        assert (g.n, g.d) == (20, 5)
        manifest = manifest_of(out)
        assert manifest.stages["ingest"].status == "completed"
        assert manifest.stages["ingest"].outputs == {
            "config.json": sha256_of(out / "config.json"),
            "graph.json": sha256_of(out / "graph.json"),
        }

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["unknown"],
            ["ingest", "--edge-file", "e.tsv"],
            ["train", "--epochs", "many"],
            ["train", "--epochs", "0"],
            ["train", "--sampler", "random"],
        ],
        ids=["no-command", "unknown-command", "missing-flag", "non-integer", "out-of-range", "bad-choice"],
    )
    def test_usage_and_config_errors(self, argv):
        assert main(argv) == 1

    def test_missing_input_names_its_path(self, tmp_path, capsys, write_tsv):
        missing = tmp_path / "absent.tsv"
        code = main(["ingest", "--edge-file", str(missing), "--attribute-file", str(write_tsv("a.tsv", "a\t#x\n")),
                     "--output-dir", str(tmp_path / "run")])
        assert code == 2
        assert str(missing) in capsys.readouterr().err

    def test_train_without_graph(self, tmp_path):
        assert main(["train", "--output-dir", str(tmp_path / "empty"), *SMALL_TRAIN]) == 2

    def test_divergence_is_a_numeric_failure(self, tiny_inputs, tmp_path):
        out = tmp_path / "run"
        code = main(run_args(tiny_inputs, out, "--learning-rate", "1e6", "--w-recon", "50", "--w-sim", "50",
                             "--epochs", "200"))
        assert code == 3
        manifest = manifest_of(out)
        assert manifest.stages["ingest"].status == "completed"
        assert manifest.stages["train"].status == "failed"
        assert "TrainingDivergedError" in manifest.stages["train"].error
        assert not manifest.complete


class TestRun:
    def test_rerun_is_byte_identical(self, tiny_inputs, tmp_path):
        first, second = tmp_path / "first", tmp_path / "second"
        assert main(run_args(tiny_inputs, first)) == 0
        assert main(run_args(tiny_inputs, second)) == 0
        for name in ("graph.json", "latent.csv", "loss_history.csv", "labels.csv", "ranking.json", "report.json"):
            assert (first / name).read_bytes() == (second / name).read_bytes(), name

    def test_manifest_lists_every_stage(self, tiny_inputs, tmp_path):
        out = tmp_path / "run"
        assert main(run_args(tiny_inputs, out)) == 0
        manifest = manifest_of(out)
        assert manifest.complete
        assert list(manifest.stages) == ["ingest", "train", "cluster", "fingerprint"]
        for record in manifest.stages.values():
            for name, checksum in record.outputs.items():
                assert sha256_of(out / name) == checksum
        assert set(manifest.stages["train"].outputs) == {"config.json", "checkpoint.json", "latent.csv", "loss_history.csv"}

    def test_resolved_config_replays_the_run(self, tiny_inputs, tmp_path):
        first, second = tmp_path / "first", tmp_path / "second"
        assert main(run_args(tiny_inputs, first, "--lam", "0.7", "--seed", "5")) == 0
        config = first / "config.json"
        assert manifest_of(first).stages["train"].outputs["config.json"] == sha256_of(config)
        settings = load_settings(config)
        assert (settings.loss.lam, settings.train.seed, settings.train.epochs) == (0.7, 5, 20)
        assert (settings.cluster.eps, settings.fingerprint.bins) == (0.5, 5)
        assert settings.config_hash() == manifest_of(first).stages["train"].config_hash

        assert main(["run", "--config", str(config), "--output-dir", str(second)]) == 0
        for name in ("latent.csv", "labels.csv", "report.json"):
            assert (first / name).read_bytes() == (second / name).read_bytes(), name

    def test_embed_reexports_the_latent_matrix(self, tiny_inputs, tmp_path, clean_graph):
        out = tmp_path / "run"
        assert main(run_args(tiny_inputs, out)) == 0
        latent = (out / "latent.csv").read_bytes()
        (out / "latent.csv").unlink()
        assert main(["embed", "--output-dir", str(out)]) == 0
        assert (out / "latent.csv").read_bytes() == latent
        assert manifest_of(out).stages["embed"].status == "completed"

        other = ["embed", "--graph-file", str(clean_graph), "--checkpoint", str(out / "checkpoint.json"),
                 "--output-dir", str(tmp_path / "other")]
        assert main(other) == 2

    def test_stages_rerun_from_files(self, tiny_inputs, tmp_path):
        out = tmp_path / "run"
        assert main(run_args(tiny_inputs, out)) == 0
        labels = (out / "labels.csv").read_bytes()
        assert main(["cluster", "--output-dir", str(out), "--eps", "0.5", "--min-pts", "2", "--k", "3"]) == 0
        assert (out / "labels.csv").read_bytes() == labels
        assert main(["fingerprint", "--output-dir", str(out), "--m", "2", "--bins", "5", "--k", "3"]) == 0

    def test_outputs(self, tiny_inputs, tmp_path):
        out = tmp_path / "run"
        assert main(run_args(tiny_inputs, out, "--eps", "100")) == 0
        labels = pd.read_csv(out / "labels.csv", dtype={"node_id": str})
        assert list(labels.columns) == ["node_id", "cluster_label"]
        assert (labels["cluster_label"] == 0).all()
        ranking = json.loads((out / "ranking.json").read_text())
        assert ranking[0]["cluster_id"] == 0 and ranking[0]["size"] == 20
        report = json.loads((out / "report.json").read_text())
        assert report["run_metadata"]["n"] == 20
        assert len(report["clusters"]) == 1
        for name in ("hashtag_fingerprint.csv", "clustering_fingerprint.csv", "authority.csv"):
            assert (out / name).is_file()
        latent = pd.read_csv(out / "latent.csv")
        assert latent.shape == (20, 5)


class TestEvaluation:
    def test_perfect_prediction(self, tiny_inputs, tmp_path, write_tsv):
        out = tmp_path / "run"
        assert main(run_args(tiny_inputs, out, "--eps", "100", "--t", "0")) == 0
        truth = pd.DataFrame({"node_id": [f"u{i}" for i in range(20)], "label": 1, "block": 0})
        truth_path = tmp_path / "truth.csv"
        truth.to_csv(truth_path, index=False)
        assert main(["eval", "--run-dir", str(out), "--output-dir", str(out), "--ground-truth", str(truth_path),
                     "--t", "0", "--k", "1"]) == 0
        report = json.loads((out / "eval.json").read_text())
        assert report["pipeline"]["f1"] == 1.0
        assert "f1" in report["baseline"]
        assert (out / "baseline.json").is_file()
        assert manifest_of(out).stages["eval"].status == "completed"

    def test_missing_ground_truth(self, tiny_inputs, tmp_path):
        out = tmp_path / "run"
        assert main(run_args(tiny_inputs, out)) == 0
        assert main(["eval", "--output-dir", str(out)]) == 2


class TestSynthetic:
    def test_generate_inject_run_eval(self, clean_graph, tmp_path):
        out = tmp_path / "injected"
        assert main(["inject", "--graph-file", str(clean_graph), "--output-dir", str(out), *SMALL_BLOCKS]) == 0
        truth = pd.read_csv(out / "ground_truth.csv")
        assert list(truth.columns) == ["node_id", "label", "block"]
        assert truth["label"].sum() == 10
        assert main(["run", "--output-dir", str(out), *SMALL_RUN]) == 0
        manifest = manifest_of(out)
        assert manifest.complete
        assert list(manifest.stages) == ["inject", "train", "cluster", "fingerprint", "eval"]
        assert (out / "eval.json").is_file()

    def test_inject_refuses_to_overwrite_its_input(self, clean_graph):
        before = clean_graph.read_bytes()
        assert main(["inject", "--output-dir", str(clean_graph.parent), *SMALL_BLOCKS]) == 1
        assert clean_graph.read_bytes() == before

    def test_search_and_sweep(self, clean_graph, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({
            "train": {"epochs": 20, "batch_size": 8, "latent_dim": 4, "hidden_adj": 8, "hidden_attr": 4},
            "cluster": {"min_pts": 3},
            "search": {
                "trials": 2,
                "loss": {"lam": {"low": 0.5, "high": 2.0}},
                "train": {"learning_rate": {"low": 0.001, "high": 0.01, "log": True}},
                "cluster": {"eps": {"low": 0.1, "high": 1.0}},
            },
            "sweep": {"densities": [0.3, 0.8], "seeds": [0, 1]},
        }))
        out = tmp_path / "search"
        common = ["--config", str(config), "--graph-file", str(clean_graph), "--output-dir", str(out), *SMALL_BLOCKS]
        assert main(["search", *common]) == 0
        log = pd.read_csv(out / "trial_log.csv")
        assert list(log.columns) == ["trial", "config_json", "f1", "runtime_s", "diverged"]
        assert len(log) == 2
        best = json.loads((out / "best_config.json").read_text())
        assert best["f1"] == log["f1"].max()

        assert main(["sweep", *common, "--best-config", str(out / "best_config.json")]) == 0
        sweep = pd.read_csv(out / "sweep.csv")
        assert sweep["density"].tolist() == [0.3, 0.8]
        assert manifest_of(out).stages["sweep"].status == "completed"

    def test_search_reruns_are_identical(self, clean_graph, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({
            "train": {"epochs": 10, "batch_size": 8, "latent_dim": 4, "hidden_adj": 8, "hidden_attr": 4},
            "search": {"trials": 2, "loss": {}, "train": {}, "cluster": {"eps": {"low": 0.1, "high": 1.0}}},
        }))
        logs = []
        for name in ("a", "b"):
            out = tmp_path / name
            assert main(["search", "--config", str(config), "--graph-file", str(clean_graph),
                         "--output-dir", str(out), *SMALL_BLOCKS]) == 0
            logs.append(pd.read_csv(out / "trial_log.csv")[["trial", "config_json", "f1"]])
        pd.testing.assert_frame_equal(logs[0], logs[1])
