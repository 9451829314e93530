import json

import hamlab


def test_round_trip():
    d = hamlab.Digraph.parse("DG 3\n010\n001\n100\n")
    assert d.order == 3
    assert d.arc(0, 1)
    assert not d.arc(1, 0)
    assert hamlab.Digraph.parse(d.serialize()) == d


def test_parse_errors():
    try:
        hamlab.Digraph.parse("DG 2\n11\n00\n")
    except ValueError as e:
        assert "loop" in str(e)
    else:
        raise AssertionError("loop bit accepted")


def test_solvers():
    k3 = hamlab.generate("complete:n=3")
    assert hamlab.hamiltonian_cycle(k3) == [0, 1, 2]
    assert hamlab.verify_certificate(k3, [0, 1, 2])

    phi = hamlab.phi_maximal(8, 6)
    profile = hamlab.cycle_length_profile(phi)
    assert profile["lengths"] == [2, 3, 4, 5, 7, 8]
    assert not profile["pancyclic"]
    assert hamlab.is_in_phi(phi, 8, 6, list(range(8)))

    c5 = hamlab.generate("directed_cycle:n=5")
    assert hamlab.longest_cycle(c5) == [0, 1, 2, 3, 4]
    assert hamlab.longest_cycle(c5, avoiding=3) is None


def test_conditions_and_connectivity():
    c5 = hamlab.generate("directed_cycle:n=5")
    r = hamlab.evaluate_condition(c5, "meyniel")
    assert not r["satisfied"]
    assert r["witness"]["vertices"] == [0, 2]
    assert r["witness"]["lhs"] == 4

    k33 = hamlab.generate("complete_bipartite:a=3,b=3")
    assert hamlab.vertex_connectivity(k33)["kappa"] == 3
    assert hamlab.two_path_count(k33, 0, 1) == 3
    assert hamlab.is_k_strong(k33, 3)
    assert hamlab.min_nonadjacent_pair_sum(k33) == (12, (0, 1))


def test_cycle_factor():
    k23 = hamlab.generate("complete_bipartite:a=2,b=3")
    assert not hamlab.has_cycle_factor(k23)
    w = hamlab.extract_partition_witness(k23)
    assert hamlab.verify_partition_witness(k23, w["Y"], w["Z"], w["R1"], w["R2"])
    assert len(w["Y"]) > len(w["Z"])

    c6 = hamlab.generate("directed_cycle:n=6")
    assert hamlab.extract_cycle_factor(c6) == [[0, 1, 2, 3, 4, 5]]


def test_verify_report():
    report = json.loads(hamlab.verify_json("factor-1.4", 4, "exhaustive"))
    assert report["digraphs_examined"] == 4096
    assert report["conclusion_failures"] == []
    assert report["rng_name"] == hamlab.RNG_NAME

    ids = hamlab.registry_ids()
    assert "manoussakis-1.12" in ids
    assert len(ids) == 17


def test_exploration_determinism():
    a = json.loads(hamlab.explore_problem_json(8, "sampled", samples=200, seed=11))
    b = json.loads(hamlab.explore_problem_json(8, "sampled", samples=200, seed=11))
    a.pop("runtime_ms")
    b.pop("runtime_ms")
    assert a == b
    assert a["exploration"]


def test_sampling_determinism():
    x = hamlab.sample_digraph(7, 42, 5)
    y = hamlab.sample_digraph(7, 42, 5)
    assert x.serialize() == y.serialize()
