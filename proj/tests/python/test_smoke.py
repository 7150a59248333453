"""Smoke tests for the python bindings: every main operation is reachable and
returns sane values. The numerical heavy lifting is covered by the C++ suites."""

import math

import pytest

import scenval as sv


@pytest.fixture
def white_set():
    spec = sv.GeneratorSpec()
    spec.kind = sv.GeneratorKind.white_gaussian
    spec.seed = 5
    spec.n = 96 * 32
    ts = sv.generate(spec)
    set_, truncated = sv.as_scenario_set(ts, 96)
    assert truncated == 0
    return set_


def test_version_string():
    assert sv.__version__.count(".") == 2


def test_scenario_set_roundtrip():
    set_ = sv.ScenarioSet([1.0, 2.0, 3.0, 4.0], n_steps=2, dt_hours=0.25)
    assert set_.n_scenarios == 2
    assert set_.scenario(1) == [3.0, 4.0]
    ts = sv.concatenate(set_)
    assert ts.values == [1.0, 2.0, 3.0, 4.0]
    assert ts.scenario_len == 2
    assert sv.daily_means(set_).values == [1.5, 3.5]
    assert sorted(sv.flatten_timesteps(set_).values) == [1.0, 2.0, 3.0, 4.0]


def test_csv_load_and_clean(tmp_path):
    path = tmp_path / "scen.csv"
    path.write_text("t0,t1\n0.1,0.9\n0.2,nan\n0.3,0.7\n")
    raw = sv.load_scenario_csv(str(path), 0.25)
    assert raw.n_scenarios == 3
    cleaned, dropped = sv.clean_scenarios(raw, sv.CleaningPolicy())
    assert dropped == 1
    assert cleaned.n_scenarios == 2

    scaled, inverse = sv.affine_rescale(cleaned, -1.0, 1.0)
    assert min(scaled.values) == -1.0
    assert max(scaled.values) == 1.0
    assert inverse.invert(-1.0) == pytest.approx(min(cleaned.values))


def test_kde(white_set):
    samples = sv.flatten_timesteps(white_set)
    est = sv.kde_pdf(samples)
    assert est.bandwidth > 0
    assert len(est.grid) == 512
    # trapezoid integral close to one
    integral = sum(
        0.5 * (est.density[i] + est.density[i - 1]) * (est.grid[i] - est.grid[i - 1])
        for i in range(1, len(est.grid))
    )
    assert 0.99 <= integral <= 1.01
    logs = sv.log_density(est)
    assert all(l <= 1.0 for l in logs)


def test_acf_and_matching(white_set):
    curve = sv.acf(white_set.scenario(0), max_lag=95)
    assert curve.values[0] == 1.0
    match = sv.best_match_by_acf(white_set.scenario(3), white_set, 95, reference_index=3)
    assert match.best_candidate_index == 3
    assert match.mse == 0.0
    panel = sv.acf_panel(white_set, white_set, n_examples=2, max_lag=95, seed=1)
    assert len(panel.pairs) == 2
    assert panel.caveat


def test_spectral(white_set):
    ts = sv.concatenate(white_set)
    spec = sv.welch_psd(ts)
    assert spec.segment_len == 192
    assert max(spec.frequencies) <= 2.0 + 1e-12  # Nyquist for 15 min
    report = sv.psd_report(white_set, white_set)
    assert report.reference.psd == report.candidate.psd
    assert all(
        flag == (period > 12.0)
        for flag, period in zip(report.reference.flagged, report.reference.periods)
    )


def test_mfdfa(white_set):
    ts = sv.concatenate(white_set)
    surface = sv.fluctuation_function(ts, sv.MfdfaConfig())
    assert surface.s_values[0] == 3
    assert surface.s_values[-1] == 96
    fitted = sv.hurst_fit(surface, (8, 47))
    assert len(fitted.hurst) == 6
    h2 = fitted.hurst[0].exponent
    assert 0.3 < h2 < 0.7  # white noise
    report = sv.mfdfa_report(white_set, white_set)
    assert report.reference.fluctuation == report.candidate.fluctuation


def test_run_validation(tmp_path, white_set):
    ref = tmp_path / "ref.csv"
    rows = [
        ",".join(repr(v) for v in white_set.scenario(s))
        for s in range(white_set.n_scenarios)
    ]
    ref.write_text("\n".join(rows) + "\n")

    cfg = sv.ValidationConfig()
    cfg.reference_csv = str(ref)
    cfg.candidate_csv = str(ref)
    cfg.dt_hours = 0.25
    cfg.output_dir = str(tmp_path / "out")
    cfg.emit_plots = False
    cfg.acf.n_examples = 2
    bundle = sv.run_validation(cfg)
    assert (tmp_path / "out" / "summary.json").exists()
    assert (tmp_path / "out" / "mfdfa.csv").exists()
    assert bundle.reference_digest == bundle.candidate_digest
    assert all(p.mse == 0.0 for p in bundle.acf.pairs)

    echoed = sv.config_from_json(sv.config_to_json(cfg))
    assert sv.config_to_json(echoed) == sv.config_to_json(cfg)


def test_error_types():
    with pytest.raises(ValueError):
        sv.acf([1.0, 2.0, 3.0], max_lag=99)  # config error -> ValueError
    with pytest.raises(RuntimeError):
        sv.acf([1.0, 1.0, 1.0, 1.0], max_lag=2)  # degenerate -> RuntimeError
