import numpy as np
import pytest

from opcurves import (Dataset, DegenerateClassError, EmptyInputError, ParseError,
                      Priors, SimulationSpec, SimulationSpecError, from_csv,
                      parse_dataset, serialize_dataset, simulate_gaussian, to_csv)


def test_basic_properties(toy):
    assert toy.n == 9
    assert toy.n_p == 3
    assert toy.n_n == 6
    assert toy.pi_p == pytest.approx(1 / 3, abs=0)
    assert toy.pi_p + toy.pi_n == pytest.approx(1.0, abs=1e-15)
    assert len(toy) == 9
    assert toy.positive_scores.tolist() == [0.20, 0.90, 0.95]


def test_arrays_are_frozen(toy):
    with pytest.raises(ValueError):
        toy.scores[0] = 0.5
    with pytest.raises(ValueError):
        toy.labels[0] = 1


def test_equality_and_hash(toy):
    twin = Dataset(np.array(toy.scores), np.array(toy.labels))
    assert toy == twin
    assert hash(toy) == hash(twin)
    other = Dataset(np.array([0.1, 0.9]), np.array([0, 1]))
    assert toy != other


def test_rejects_empty():
    with pytest.raises(EmptyInputError):
        Dataset(np.array([]), np.array([]))


def test_rejects_single_class():
    with pytest.raises(DegenerateClassError):
        Dataset(np.array([0.2, 0.4]), np.array([1, 1]))


def test_rejects_out_of_range_scores():
    with pytest.raises(ValueError):
        Dataset(np.array([0.2, 1.4]), np.array([1, 0]))
    with pytest.raises(ValueError):
        Dataset(np.array([0.2, np.nan]), np.array([1, 0]))


def test_rejects_bad_labels():
    with pytest.raises(ValueError):
        Dataset(np.array([0.2, 0.4]), np.array([1, 2]))


def test_parse_accepts_letter_labels():
    data = parse_dataset([("0.2", "p"), ("0.4", "N"), ("0.6", "1"), ("0.8", "0")])
    assert data.labels.tolist() == [1, 0, 1, 0]


def test_parse_reports_row_numbers():
    with pytest.raises(ParseError, match="row 2"):
        parse_dataset([("0.2", "1"), ("x", "0")])
    with pytest.raises(ParseError, match="row 1"):
        parse_dataset([("0.2", "maybe"), ("0.3", "0")])


def test_serialize_round_trip(toy):
    again = parse_dataset(serialize_dataset(toy))
    assert again == toy


def test_csv_round_trip(toy):
    text = to_csv(toy)
    assert text.splitlines()[0] == "score,label"
    assert from_csv(text) == toy


def test_csv_requires_header():
    with pytest.raises(ParseError, match="header"):
        from_csv("0.5,1\n0.2,0\n")


def test_csv_rejects_ragged_rows():
    # data rows are numbered from 1, excluding the header
    with pytest.raises(ParseError, match="row 1"):
        from_csv("score,label\n0.5,1,9\n")
    with pytest.raises(ParseError, match="row 2"):
        from_csv("score,label\n0.5,1\n0.2,0,7\n")


def test_priors_validation():
    with pytest.raises(ValueError):
        Priors(pi_p=0.0, pi_n=1.0)
    with pytest.raises(ValueError):
        Priors(pi_p=0.6, pi_n=0.6)
    p = Priors.from_counts(3, 6)
    assert p.pi_p == 3 / 9
    assert p.pi_n == 6 / 9


def test_simulation_is_deterministic():
    spec = SimulationSpec(n=500, pi_p=0.2, mu_n=0.4, sigma_n=0.12,
                          mu_p=0.6, sigma_p=0.12, seed=11)
    a = simulate_gaussian(spec)
    b = simulate_gaussian(spec)
    assert a == b
    assert a.n == 500
    assert a.n_p == 100
    assert float(a.scores.min()) >= 0.0
    assert float(a.scores.max()) <= 1.0
    # positives score higher on average by construction
    assert a.positive_scores.mean() > a.negative_scores.mean()


def test_simulation_seed_changes_data():
    base = dict(n=500, pi_p=0.2, mu_n=0.4, sigma_n=0.12, mu_p=0.6, sigma_p=0.12)
    a = simulate_gaussian(SimulationSpec(seed=1, **base))
    b = simulate_gaussian(SimulationSpec(seed=2, **base))
    assert a != b


def test_simulation_spec_validation():
    with pytest.raises(SimulationSpecError):
        SimulationSpec(n=1, pi_p=0.2, mu_n=0.4, sigma_n=0.12,
                       mu_p=0.6, sigma_p=0.12, seed=0)
    with pytest.raises(SimulationSpecError):
        SimulationSpec(n=100, pi_p=0.0, mu_n=0.4, sigma_n=0.12,
                       mu_p=0.6, sigma_p=0.12, seed=0)
    with pytest.raises(SimulationSpecError):
        SimulationSpec(n=100, pi_p=0.2, mu_n=0.4, sigma_n=0.0,
                       mu_p=0.6, sigma_p=0.12, seed=0)


def test_simulation_rejects_empty_class():
    spec = SimulationSpec(n=10, pi_p=0.01, mu_n=0.4, sigma_n=0.12,
                          mu_p=0.6, sigma_p=0.12, seed=0)
    with pytest.raises(SimulationSpecError):
        simulate_gaussian(spec)
