import itertools
import math

import pytest
from hypothesis import given, settings

from qmain.errors import ConsistencyViolation, NotConnected
from qmain.exact import main_count_exact
from qmain.families import build, cycle, double_star, g1, g2, path, star, t_tree
from qmain.graph import from_edges, s_values
from qmain.spectra import spectrum
from qmain.walks import (
    DISCRIMINANT_FAIL,
    NON_INTEGER_AB,
    REGULAR,
    RESIDUAL_FAIL,
    ClassifyFailure,
    LinearCertificate,
    MainClass,
    ParabolicCertificate,
    certificate_spectrum_consistency,
    core_degree_check,
    core_degrees,
    linear_certificate,
    main_count_combinatorial,
    parabolic_certificate,
    parabolic_residual,
    pendant_gap_check,
    solve_parabolic,
)

from conftest import connected_graphs
from oracles import connected_atlas_graphs


@pytest.mark.parametrize(
    "spec, ab",
    [
        (star(5), (5, 0)),
        (double_star(3, 3), (5, 1)),
        (g1(3, 2), (7, 2)),
        (g2(2), (5, 1)),
    ],
)
def test_parabolic_golden(spec, ab):
    cert = parabolic_certificate(build(spec))
    assert isinstance(cert, ParabolicCertificate)
    assert (cert.a, cert.b) == ab and cert.max_residual == 0


def test_parabolic_regular_failure():
    out = parabolic_certificate(build(cycle(6)))
    assert isinstance(out, ClassifyFailure) and out.reason == REGULAR


def test_parabolic_p5_residual_failure():
    p5 = build(path(5))
    d, s = p5.degrees, s_values(p5)
    assert s == [2, 3, 4, 3, 2]
    # fit through v1, v3 then check v2
    a, b = solve_parabolic(d[0], s[0], d[2], s[2])
    assert (a, b) == (5, 2)
    assert parabolic_residual(d[1], s[1], a, b) == -1  # -4 + 10 - 2 = 4 != 3
    out = parabolic_certificate(p5)
    assert isinstance(out, ClassifyFailure) and out.reason == RESIDUAL_FAIL
    assert out.vertex is not None and out.residual != 0


def test_parabolic_non_integer_and_discriminant_failures():
    # slope (s_u - s_v)/(d_u - d_v) fractional -> non-integer a
    a, b = solve_parabolic(1, 3, 3, 4)
    assert a.denominator != 1
    reasons = set()
    for n, edges in connected_atlas_graphs(7):
        out = parabolic_certificate(from_edges(n, edges))
        if isinstance(out, ClassifyFailure):
            reasons.add(out.reason)
    assert {REGULAR, NON_INTEGER_AB, RESIDUAL_FAIL} <= reasons


def test_discriminant_failure():
    # triangle 1-2-3 with the path 3-4-0-5 hanging off it
    g = from_edges(6, [(0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4)])
    out = parabolic_certificate(g)
    assert out.reason == DISCRIMINANT_FAIL
    assert out.candidate == (8, 9)  # 64 - 72 <= 0
    assert "DiscriminantFail" in out.describe()
    lin = linear_certificate(g)
    assert lin.reason == DISCRIMINANT_FAIL and lin.candidate == (3, -3)  # 9 - 12 <= 0


def test_parabolic_requires_connected():
    with pytest.raises(NotConnected):
        parabolic_certificate(from_edges(4, [(0, 1), (2, 3)]))


def test_certificate_type_invariants():
    with pytest.raises(ValueError):
        ParabolicCertificate(2, 1)  # a^2 - 8b = -4
    with pytest.raises(ValueError):
        ParabolicCertificate(0, 0)


def test_linear_examples():
    assert linear_certificate(build(t_tree(2))) == LinearCertificate(2, 0)
    assert linear_certificate(from_edges(4, [(0, 1), (0, 2), (0, 3)])) == LinearCertificate(0, 3)
    out = linear_certificate(build(g2(1)))
    assert isinstance(out, ClassifyFailure)
    # fit through the pendant (d=1, s=3) and u2 (d=2, s=5): a=2, b=1; u1 has d=3, s=5
    assert 2 * 3 + 1 != 5
    assert linear_certificate(build(cycle(5))).reason == REGULAR


def test_main_count_combinatorial_examples():
    assert main_count_combinatorial(build(cycle(9))).kind is MainClass.ONE
    kind, cert = main_count_combinatorial(build(g1(4, 1)))
    assert kind is MainClass.TWO and (cert.a, cert.b) == (6, 2)
    assert main_count_combinatorial(build(t_tree(2))).kind is MainClass.THREE_OR_MORE
    assert main_count_combinatorial(from_edges(2, [(0, 1)])).kind is MainClass.ONE


def test_parabolic_iff_two_main_on_all_small_connected_graphs():
    """Every connected graph on <= 7 vertices: combinatorial class == exact class."""
    checked = 0
    for n, edges in connected_atlas_graphs(7):
        g = from_edges(n, edges)
        exact = main_count_exact(g)
        assert main_count_combinatorial(g).kind is MainClass.from_count(exact), edges
        checked += 1
    assert checked == 996


@settings(max_examples=150)
@given(connected_graphs(min_n=3, max_n=10))
def test_parabolic_iff_two_main_random(g):
    assert main_count_combinatorial(g).kind is MainClass.from_count(main_count_exact(g))


def _two_main_graphs():
    out = [build(s) for s in (star(5), star(9), double_star(4, 4), g1(3, 1), g1(5, 3), g2(1), g2(3))]
    for n, edges in connected_atlas_graphs(7):
        g = from_edges(n, edges)
        if isinstance(parabolic_certificate(g), ParabolicCertificate):
            out.append(g)
    return out


def test_certificate_unique_over_all_degree_distinct_pairs():
    for g in _two_main_graphs():
        cert = parabolic_certificate(g)
        d, s = g.degrees, s_values(g)
        for u, v in itertools.combinations(range(g.n), 2):
            if d[u] != d[v]:
                assert solve_parabolic(d[u], s[u], d[v], s[v]) == (cert.a, cert.b)


def test_certificate_roots_match_main_eigenvalues():
    for g in _two_main_graphs():
        cert = parabolic_certificate(g)
        disc = cert.a ** 2 - 8 * cert.b
        assert disc > 0
        roots = sorted([(cert.a + math.sqrt(disc)) / 2, (cert.a - math.sqrt(disc)) / 2], reverse=True)
        mains = [c.value for c in spectrum(g).main]
        assert len(mains) == 2
        assert all(abs(x - y) <= 1e-6 for x, y in zip(roots, mains))


@pytest.mark.parametrize(
    "g, roots",
    [
        (from_edges(3, [(0, 1), (1, 2)]), (3.0, 0.0)),
        (build(star(5)), (5.0, 0.0)),
        (build(g2(1)), ((5 + math.sqrt(17)) / 2, (5 - math.sqrt(17)) / 2)),
    ],
)
def test_consistency_examples(g, roots):
    cert = parabolic_certificate(g)
    rep = certificate_spectrum_consistency(g, cert, spectrum(g))
    assert abs(rep.mu1 - roots[0]) <= 1e-9 and abs(rep.mu2 - roots[1]) <= 1e-9
    assert rep.residual <= rep.residual_tol


def test_consistency_violation():
    g = build(star(5))
    with pytest.raises(ConsistencyViolation):
        certificate_spectrum_consistency(g, ParabolicCertificate(6, 0), spectrum(g))
    with pytest.raises(ConsistencyViolation):
        certificate_spectrum_consistency(build(path(5)), ParabolicCertificate(5, 0), spectrum(build(path(5))))


def test_pendant_gap_examples():
    assert pendant_gap_check(build(star(6)), ParabolicCertificate(6, 0)).ok
    assert pendant_gap_check(build(g1(3, 1)), ParabolicCertificate(6, 2)).ok
    cert = parabolic_certificate(build(g2(2)))
    assert (cert.a - cert.b, cert.a) == (4, 5)
    assert pendant_gap_check(build(g2(2)), cert).ok
    bad = pendant_gap_check(build(g2(2)), ParabolicCertificate(5, 2))
    assert not bad.ok and bad.witness


def test_core_degrees_and_dichotomy():
    g = build(g1(4, 2))
    assert core_degrees(g) == {v: 2 for v in range(4)}
    assert core_degree_check(g, parabolic_certificate(g)).ok
    g = build(g2(2))
    assert core_degree_check(g, parabolic_certificate(g)).ok
    assert not core_degree_check(g, ParabolicCertificate(7, 1)).ok
