import math

import pytest

from strengthlab.ci import (
    InstanceKind,
    InstanceParams,
    LemmaParams,
    check_lemma_on_ideal,
    check_lemma_strength_jacobian,
    ci_test,
    generate_instance,
    hypothesis_report,
    lemma_sweep,
)
from strengthlab.errors import ParamOutOfRange
from strengthlab.field import QQ
from strengthlab.groebner import codim, minimal_generator_count
from strengthlab.io import parse_ideal_file
from strengthlab.poly import Ideal, Ring
from strengthlab.strength import strength

from conftest import F3, F5


def test_ci_examples(corpus):
    R = Ring(QQ, 3)
    x1, x2, _ = R.gens()
    assert ci_test(Ideal(R, [x1**2, x2**3]))
    assert ci_test(Ideal(R, [x1 * x2]))
    tc = parse_ideal_file(corpus / "twisted_cubic.ideal")
    assert not ci_test(tc)
    assert codim(tc) == 2 and minimal_generator_count(tc)[0] == 3


def test_report_examples(corpus):
    rep = hypothesis_report(parse_ideal_file(corpus / "quadric_cone.ideal"))
    assert (rep.codim, rep.mu, rep.sing_codim, rep.is_ci) == (1, 1, 3, True)
    assert rep.consistent() and not rep.prime_advisory
    rep = hypothesis_report(parse_ideal_file(corpus / "twisted_cubic.ideal"))
    assert not rep.is_ci and rep.sing_codim == 2
    rep = hypothesis_report(parse_ideal_file(corpus / "hyperplane.ideal"))
    assert rep.is_ci and rep.sing_codim == math.inf and rep.prime_advisory
    d = rep.to_dict()
    assert d["sing_codim"] == "infinity" and d["degree"] == "not computed"


@pytest.mark.parametrize("c", [1, 2, 3])
def test_complete_intersection_instances(c):
    for seed in range(60):
        params = InstanceParams(p=[3, 5, 7][seed % 3], c=c, d=1 + seed % 3, block=2)
        Q = generate_instance(InstanceKind.COMPLETE_INTERSECTION, params, seed)
        assert ci_test(Q), seed


@pytest.mark.parametrize("k", [3, 4])
def test_determinantal_not_ci(k):
    Q = generate_instance("Determinantal", InstanceParams(k=k))
    assert not ci_test(Q)
    assert minimal_generator_count(Q)[0] == k * (k - 1) // 2
    assert codim(Q) == k - 1


def test_hankel_is_twisted_cubic(corpus):
    Q = generate_instance("Determinantal", InstanceParams(p=0, k=3, hankel=True))
    assert minimal_generator_count(Q)[0] == 3 and not ci_test(Q)
    from strengthlab.groebner import ideal_equal

    assert ideal_equal(Q, parse_ideal_file(corpus / "twisted_cubic.ideal"))


def test_fermat_instances():
    Q = generate_instance("Fermat", InstanceParams(p=0, n=4, d=3))
    rep = hypothesis_report(Q)
    assert rep.is_ci and rep.sing_codim == 3


def test_generate_is_deterministic():
    a = generate_instance("LowStrength", InstanceParams(p=5, n=4, c=2, d=2, s=1), 9)
    b = generate_instance("LowStrength", InstanceParams(p=5, n=4, c=2, d=2, s=1), 9)
    assert a.generators == b.generators
    for g in a.generators:
        assert strength(g).value <= 1
    with pytest.raises(ParamOutOfRange):
        generate_instance("Fermat", InstanceParams(n=40))
    with pytest.raises(ParamOutOfRange):
        generate_instance("Cone")


def test_lemma_equality_cases():
    R = Ring(F5, 4)
    x1, x2, x3, x4 = R.gens()
    r = check_lemma_on_ideal(Ideal(R, [x1 * x2]), 1, 0)
    assert r["codim"] == 2 == r["bound"] and r["equality"]
    r = check_lemma_on_ideal(Ideal(R, [x1 * x2 + x3 * x4]), 1, 1)
    assert r["codim"] == 4 == r["bound"] and r["equality"]


def test_lemma_harness_200_trials():
    s = check_lemma_strength_jacobian(200, LemmaParams(n=6, p=5, r=2, c=1, s_budget=1), seed=0)
    d = s.to_dict()
    assert d["trials"] == 200 and d["violation_count"] == 0
    assert d["max_codim"] <= d["bound"] == 8


def test_lemma_harness_deterministic():
    a = check_lemma_strength_jacobian(10, LemmaParams(n=5, p=3, r=2, c=2, s_budget=0), seed=4).to_dict()
    b = check_lemma_strength_jacobian(10, LemmaParams(n=5, p=3, r=2, c=2, s_budget=0), seed=4).to_dict()
    assert a == b


def test_small_sweep_has_no_violations():
    for s in lemma_sweep(4, seed=1):
        assert not s.violations and s.max_codim <= s.bound


def test_lemma_params_parse():
    p = LemmaParams.parse("n=5,p=3,r=3,c=2,s=2")
    assert (p.n, p.p, p.r, p.c, p.s_budget) == (5, 3, 3, 2, 2)
    assert LemmaParams.parse(p.to_text()) == p
    with pytest.raises(ParamOutOfRange):
        LemmaParams.parse("bogus=1")
    with pytest.raises(ParamOutOfRange):
        LemmaParams(r=1, c=2).check()


def test_report_consistency_random():
    for seed in range(15):
        Q = generate_instance("LowStrength", InstanceParams(p=3, n=4, c=1 + seed % 2, d=2, s=0), seed)
        assert hypothesis_report(Q).consistent()
