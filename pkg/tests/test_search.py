import statistics

import numpy as np
import pytest
from pydantic import ValidationError

from app.core.exceptions import ConfigurationError

from app.core.schemas import (
    BackgroundSpec,
    Choice,
    ClusterConfig,
    FloatRange,
    InjectionSpec,
    Sampler,
    SearchSpace,
    TrainConfig,
    TrialConfig,
)
from app.services.injection import generate_background
from app.services.search import density_sweep, random_search, sample_config

BASE = TrialConfig(
    train=TrainConfig(epochs=20, batch_size=8, latent_dim=4, hidden_adj=8, hidden_attr=4, sampler=Sampler.UNIFORM),
    cluster=ClusterConfig(min_pts=3, k=2),
)
SPACE = SearchSpace(
    trials=3,
    loss={"lam": FloatRange(low=0.5, high=2.0), "attention_beta": Choice(values=[1.0, 3.0])},
    train={"learning_rate": FloatRange(low=1e-3, high=1e-2, log=True)},
    cluster={"eps": FloatRange(low=0.1, high=1.0), "min_pts": FloatRange(low=2, high=5)},
)
BLOCKS = InjectionSpec(num_blocks=1, block_size=10, hashtags_per_block=3, adj_density=0.6, attr_density=0.6)


@pytest.fixture(scope="module")
def clean_graph():
    return generate_background(BackgroundSpec(n=60, d=12, edge_p=0.05, attr_p=0.1, seed=0))


class TestSampleConfig:
    def test_draws_stay_in_range(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            config = sample_config(SPACE, BASE, rng)
            assert 0.5 <= config.loss.lam <= 2.0
            assert config.loss.attention_beta in (1.0, 3.0)
            assert 1e-3 <= config.train.learning_rate <= 1e-2
            assert isinstance(config.cluster.min_pts, int) and 2 <= config.cluster.min_pts <= 5

    def test_uncovered_fields_keep_base_values(self):
        config = sample_config(SPACE, BASE, np.random.default_rng(1))
        assert config.train.epochs == 20
        assert config.cluster.k == 2
        assert config.loss.w_a == BASE.loss.w_a

    def test_log_range_covers_both_decades(self):
        rng = np.random.default_rng(2)
        space = SearchSpace(loss={}, train={"learning_rate": FloatRange(low=1e-4, high=1e-2, log=True)}, cluster={})
        rates = np.array([sample_config(space, BASE, rng).train.learning_rate for _ in range(400)])
        assert 0.35 < np.mean(rates < 1e-3) < 0.65

    def test_unknown_field_is_rejected(self):
        with pytest.raises(ValidationError):
            SearchSpace(loss={"gamma": Choice(values=[1])})


class TestRandomSearch:
    def test_single_trial(self, clean_graph):
        result = random_search(clean_graph, BLOCKS, SPACE, trials=1, seed=4, base=BASE)
        assert result.best_trial == 0
        assert result.best_config == result.trials[0].config
        assert result.best_f1 == result.trials[0].f1

    def test_log_and_best(self, clean_graph):
        result = random_search(clean_graph, BLOCKS, SPACE, trials=3, seed=4, base=BASE)
        assert [r.trial for r in result.trials] == [0, 1, 2]
        assert result.best_f1 == max(r.f1 for r in result.trials)
        assert [r.config.train.seed for r in result.trials] == [4, 5, 6]

    def test_rerun_is_identical(self, clean_graph):
        first = random_search(clean_graph, BLOCKS, SPACE, trials=2, seed=8, base=BASE)
        second = random_search(clean_graph, BLOCKS, SPACE, trials=2, seed=8, base=BASE)
        assert [(r.trial, r.config, r.f1) for r in first.trials] == [(r.trial, r.config, r.f1) for r in second.trials]

    def test_default_space_on_a_small_graph(self, clean_graph):
        space = SearchSpace(trials=3, train={**SearchSpace().train, "epochs": Choice(values=[10])})
        result = random_search(clean_graph, BLOCKS, space, trials=space.trials, seed=0)
        assert len(result.trials) == 3
        assert all(r.config.train.batch_size <= clean_graph.n for r in result.trials)

    def test_oversized_batches_are_shrunk(self, clean_graph):
        space = SearchSpace(loss={}, train={"batch_size": Choice(values=[128])}, cluster={})
        result = random_search(clean_graph, BLOCKS, space, trials=2, seed=0, base=BASE)
        assert [r.config.train.batch_size for r in result.trials] == [clean_graph.n] * 2

    def test_blocks_must_fit_before_any_trial(self, clean_graph):
        too_big = BLOCKS.model_copy(update={"num_blocks": 2, "block_size": 40})
        with pytest.raises(ConfigurationError):
            random_search(clean_graph, too_big, SPACE, trials=2, seed=0, base=BASE)
        with pytest.raises(ConfigurationError):
            density_sweep(clean_graph, too_big, BASE, densities=[0.5], seeds=[0])

    def test_diverging_trials_score_zero(self, clean_graph):
        space = SearchSpace(loss={"w_recon": Choice(values=[50.0]), "w_sim": Choice(values=[50.0])},
                            train={"learning_rate": Choice(values=[1e6]), "epochs": Choice(values=[200])},
                            cluster={})
        result = random_search(clean_graph, BLOCKS, space, trials=1, seed=0, base=BASE)
        assert result.trials[0].diverged
        assert result.best_f1 == 0.0


class TestDensitySweep:
    def test_rows_hold_medians(self, clean_graph):
        rows = density_sweep(clean_graph, BLOCKS, BASE, densities=[0.3, 0.9], seeds=[0, 1, 2])
        assert [row.density for row in rows] == [0.3, 0.9]
        for row in rows:
            assert len(row.pipeline_f1_runs) == 3
            assert row.pipeline_f1 == statistics.median(row.pipeline_f1_runs)
            assert row.baseline_f1 == statistics.median(row.baseline_f1_runs)
            assert all(0.0 <= f1 <= 1.0 for f1 in row.pipeline_f1_runs + row.baseline_f1_runs)
