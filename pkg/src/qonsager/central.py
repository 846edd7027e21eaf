"""Central elements and the machinery around them.

The series Z(t) is assembled from the alternating-binomial resummations
of the generating functions at the two q-shifted arguments; its
coefficients, divided by powers of [2]_q, are the central elements.
They come out of two independent routes (series extraction and the
closed five-sum formula) which must agree, are fixed by both symmetry
maps, commute with every generator, and drive the recursion that
recovers all alternating generators from the two degree-one ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List

from . import qfield, rewrite, series
from .qfield import QRat
from .series import Report, TruncSeries
from .words import (Family, Generator, NCPoly, commutator, g_, gt_,
                    q_commutator, sigma, wm, wp)


def down_transform(a: Callable[[int], NCPoly], n: int) -> NCPoly:
    """The alternating binomial resummation with binomials C(n-1-l, l)."""
    if n == 0:
        return a(0)
    inv2sq = qfield.q_int(2) ** -2
    out = NCPoly.zero()
    for l in range((n - 1) // 2 + 1):
        c = qfield.of((-1) ** l * comb(n - 1 - l, l)) * inv2sq ** l
        out = out + a(n - 2 * l) * c
    return out


def ddown_transform(a: Callable[[int], NCPoly], n: int) -> NCPoly:
    """The companion resummation with binomials C(n-l, l)."""
    inv2sq = qfield.q_int(2) ** -2
    out = NCPoly.zero()
    for l in range(n // 2 + 1):
        c = qfield.of((-1) ** l * comb(n - l, l)) * inv2sq ** l
        out = out + a(n - 2 * l) * c
    return out


def _seq(family: Family) -> Callable[[int], NCPoly]:
    return lambda n: series.family_element(family, n)


def w_ddown(m: int) -> NCPoly:
    """The double-down W element with signed subscript m."""
    if m <= 0:
        return ddown_transform(_seq(Family.Wminus), -m)
    return ddown_transform(_seq(Family.Wplus), m - 1)


def g_down(n: int) -> NCPoly:
    return down_transform(_seq(Family.G), n)


def gt_down(n: int) -> NCPoly:
    return down_transform(_seq(Family.Gtilde), n)


# -- the S/T substitutions ---------------------------------------------------


def st_series(which: str, order: int) -> TruncSeries:
    """The scalar power series S or T in t."""
    q2 = qfield.q_int(2)
    coeffs = {}
    sign = -1 if which == "S" else 1
    for l in range(order // 2 + 1):
        n = 2 * l + 1
        if n > order:
            break
        coeffs[(n,)] = NCPoly.scalar(
            qfield.of((-1) ** l) * q2 * qfield.q_pow(sign * n))
    return TruncSeries(("t",), (order,), (1,), coeffs)


def subst_ST(family: Family, which: str, weight: str, order: int) -> TruncSeries:
    """A generating function evaluated at S or T, via the closed forms.

    weight "plain" gives a(S) or a(T); "times_ST_arg" gives S*a(S) or
    T*a(T).  Never generic power-series composition.
    """
    if which not in ("S", "T"):
        raise ValueError("which must be 'S' or 'T'")
    sgn = -1 if which == "S" else 1
    q2 = qfield.q_int(2)
    coeffs: Dict = {}
    if weight == "plain":
        for n in range(order + 1):
            elem = down_transform(_seq(family), n)
            coeffs[(n,)] = elem * (qfield.q_pow(sgn * n) * q2 ** n)
    elif weight == "times_ST_arg":
        for n in range(order):
            elem = ddown_transform(_seq(family), n)
            coeffs[(n + 1,)] = elem * (qfield.q_pow(sgn * (n + 1)) * q2 ** (n + 1))
        return TruncSeries(("t",), (order,), (1,), coeffs)
    else:
        raise ValueError("weight must be 'plain' or 'times_ST_arg'")
    return TruncSeries(("t",), (order,), (0,), coeffs)


# -- Z(t) and the elements Z_n ------------------------------------------------


def z_series(order: int, reduce: bool = True) -> TruncSeries:
    """The central generating function, coefficients in PBW normal form."""
    m = order + 3
    swm = subst_ST(Family.Wminus, "S", "times_ST_arg", m)
    swp = subst_ST(Family.Wplus, "S", "times_ST_arg", m)
    twm = subst_ST(Family.Wminus, "T", "times_ST_arg", m)
    twp = subst_ST(Family.Wplus, "T", "times_ST_arg", m)
    gs = subst_ST(Family.G, "S", "plain", m)
    gtt = subst_ST(Family.Gtilde, "T", "plain", m)
    q = qfield.q_pow
    inv = ((q(2) - q(-2)) ** 2).inverse()
    z = ((swm * twp).shift("t", -1)
         + (swp * twm).shift("t", 1)
         - q(2) * (swm * twm)
         - q(-2) * (swp * twp)
         + inv * (gs * gtt))
    if z.order[0] < order:
        raise RuntimeError("insufficient margin building the central series")
    z = TruncSeries(("t",), (order,), (0,),
                    {e: p for e, p in z.coeffs.items() if e[0] <= order})
    return z.normal_form() if reduce else z


def z_series_alt(form: int, order: int) -> TruncSeries:
    """The three alternative assemblies of the central series (form 1..3)."""
    m = order + 3
    swm = subst_ST(Family.Wminus, "S", "times_ST_arg", m)
    swp = subst_ST(Family.Wplus, "S", "times_ST_arg", m)
    twm = subst_ST(Family.Wminus, "T", "times_ST_arg", m)
    twp = subst_ST(Family.Wplus, "T", "times_ST_arg", m)
    q = qfield.q_pow
    inv = ((q(2) - q(-2)) ** 2).inverse()
    if form == 1:
        z = ((swp * twm).shift("t", -1) + (swm * twp).shift("t", 1)
             - q(2) * (swp * twp) - q(-2) * (swm * twm)
             + inv * (subst_ST(Family.Gtilde, "S", "plain", m)
                      * subst_ST(Family.G, "T", "plain", m)))
    elif form == 2:
        z = ((twp * swm).shift("t", -1) + (twm * swp).shift("t", 1)
             - q(2) * (twm * swm) - q(-2) * (twp * swp)
             + inv * (subst_ST(Family.G, "T", "plain", m)
                      * subst_ST(Family.Gtilde, "S", "plain", m)))
    elif form == 3:
        z = ((twm * swp).shift("t", -1) + (twp * swm).shift("t", 1)
             - q(2) * (twp * swp) - q(-2) * (twm * swm)
             + inv * (subst_ST(Family.Gtilde, "T", "plain", m)
                      * subst_ST(Family.G, "S", "plain", m)))
    else:
        raise ValueError("form must be 1, 2 or 3")
    z = TruncSeries(("t",), (order,), (0,),
                    {e: p for e, p in z.coeffs.items() if e[0] <= order})
    return z.normal_form()


def z_series_pbw_form(order: int) -> TruncSeries:
    """The assembly whose last term carries the divided G-difference."""
    m = 2 * order + 8
    g_S = subst_ST(Family.G, "S", "plain", m)
    gt_S = subst_ST(Family.Gtilde, "S", "plain", m)
    g_T = subst_ST(Family.G, "T", "plain", m)
    gt_T = subst_ST(Family.Gtilde, "T", "plain", m)
    st = st_series("S", m) * st_series("T", m)
    q = qfield.q_pow
    Q2 = q(2) - q(-2)
    ec = (Q2 * qfield.q_int(2) ** 2).inverse()
    u = (g_T * gt_S).shift("t", 1) - (g_S * gt_T).shift("t", -1)
    smt = st_series("S", m) - st_series("T", m)
    gpart = series.exact_divide(u, smt) * ec
    # assemble: ST * [ t^-1 W-(S)W+(T) + t W-(T)W+(S) - q^2 W-(S)W-(T)
    #                  - q^-2 W+(S)W+(T) + gpart ]
    wm_s = subst_ST(Family.Wminus, "S", "plain", m)
    wp_s = subst_ST(Family.Wplus, "S", "plain", m)
    wm_t = subst_ST(Family.Wminus, "T", "plain", m)
    wp_t = subst_ST(Family.Wplus, "T", "plain", m)
    inner = ((wm_s * wp_t).shift("t", -1)
             + (wm_t * wp_s).shift("t", 1)
             - q(2) * (wm_s * wm_t)
             - q(-2) * (wp_s * wp_t)
             + gpart)
    z = st * inner
    if z.order[0] < order:
        raise RuntimeError("insufficient margin building the PBW-form series")
    z = TruncSeries(("t",), (order,), (0,),
                    {e: p for e, p in z.coeffs.items() if 0 <= e[0] <= order})
    return z.normal_form()


@dataclass(frozen=True)
class CentralElement:
    n: int
    as_poly: NCPoly
    route: str


def z_n_direct_poly(n: int) -> NCPoly:
    """The closed five-sum formula, reduced to normal form."""
    q = qfield.q_pow
    q2 = qfield.q_int(2)
    inv = ((q(2) - q(-2)) ** 2).inverse()
    out = NCPoly.zero()
    for k in range(n):
        out = out + (w_ddown(-k) * w_ddown(n - k)) * (q2 * q(n - 1 - 2 * k))
    for k in range(n - 2):
        out = out + (w_ddown(n - 2 - k) * w_ddown(-k)) * (q2.inverse() * q(2 * k - n + 3))
    for k in range(n - 1):
        out = out - (w_ddown(-k) * w_ddown(k - n + 2)) * q(n - 2 * k)
    for k in range(n - 1):
        out = out - (w_ddown(k + 1) * w_ddown(n - k - 1)) * q(n - 2 * k - 4)
    for k in range(n + 1):
        out = out + (g_down(k) * gt_down(n - k)) * (inv * q(n - 2 * k))
    return rewrite.normal_form(out)


def z_n(n: int, route: str = "direct") -> CentralElement:
    """The n-th central element by the requested route."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if route == "direct":
        poly = z_n_direct_poly(n)
    elif route == "extraction":
        coeff = z_series(n).coeff(t=n)
        poly = coeff * qfield.q_int(2) ** -n
    else:
        raise ValueError("route must be 'direct' or 'extraction'")
    return CentralElement(n, poly, route)


def z_bar(n: int) -> NCPoly:
    """The n-th central element with its two top G terms removed."""
    if n < 1:
        raise ValueError("the adjusted central element needs n >= 1")
    zn = z_n(n).as_poly
    qm = qfield.Q - qfield.q_pow(-1)
    corr = (NCPoly.gen(g_(n)) * qfield.q_pow(-n)
            + NCPoly.gen(gt_(n)) * qfield.q_pow(n)) * qm.inverse()
    return rewrite.normal_form(zn + corr)


def z_bar_subtracted_form(n: int) -> NCPoly:
    """The same element via direct subtraction of the scalar-paired terms."""
    if n < 1:
        raise ValueError("n >= 1 required")
    zn = z_n(n).as_poly
    q = qfield.q_pow
    inv = ((q(2) - q(-2)) ** 2).inverse()
    g0 = qfield.g0_const()
    sub = (NCPoly.gen(gt_(n)) * (g0 * q(n)) + NCPoly.gen(g_(n)) * (g0 * q(-n))) * inv
    return rewrite.normal_form(zn - sub)


def z_bar_expanded_poly(n: int, elem=None) -> NCPoly:
    """The expanded formula for the adjusted element, in lower-index letters.

    elem(family, k) supplies the letter polynomials; the default uses the
    true letters.  The recursion passes recovered polynomials instead.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if elem is None:
        elem = series.family_element
    q = qfield.q_pow
    q2 = qfield.q_int(2)
    qm = qfield.Q - q(-1)
    inv = ((q(2) - q(-2)) ** 2).inverse()
    inv2sq = q2 ** -2

    def wplus_dd(m):
        # ddown over the plus family with subscript m >= 1
        return ddown_transform(lambda k: elem(Family.Wplus, k), m - 1)

    def wminus_dd(k):
        return ddown_transform(lambda j: elem(Family.Wminus, j), k)

    def gdown(k):
        return down_transform(lambda j: elem(Family.G, j), k)

    def gtdown(k):
        return down_transform(lambda j: elem(Family.Gtilde, j), k)

    out = NCPoly.zero()
    for k in range(n):
        out = out + (wminus_dd(k) * wplus_dd(n - k)) * (q2 * q(n - 1 - 2 * k))
    for k in range(n - 2):
        out = out + (wplus_dd(n - 2 - k) * wminus_dd(k)) * (q2.inverse() * q(2 * k - n + 3))
    for k in range(n - 1):
        out = out - (wminus_dd(k) * wminus_dd(n - 2 - k)) * q(n - 2 * k)
    for k in range(n - 1):
        out = out - (wplus_dd(k + 1) * wplus_dd(n - k - 1)) * q(n - 2 * k - 4)
    for k in range(1, n):
        out = out + (gdown(k) * gtdown(n - k)) * (inv * q(n - 2 * k))
    for l in range(1, (n - 1) // 2 + 1):
        c = qfield.of((-1) ** l * comb(n - 1 - l, l)) * inv2sq ** l
        out = out - elem(Family.G, n - 2 * l) * (c * q(-n) * qm.inverse())
        out = out - elem(Family.Gtilde, n - 2 * l) * (c * q(n) * qm.inverse())
    return out


def delta_n(n: int) -> NCPoly:
    """The classical central elements; a scalar multiple of the new ones."""
    if n < 1:
        raise ValueError("n >= 1 required")
    scale = (qfield.of(-2) * (qfield.Q - qfield.q_pow(-1))
             / (qfield.q_pow(n) + qfield.q_pow(-n)))
    return z_n(n).as_poly * scale


def delta_scale(n: int) -> QRat:
    return (qfield.of(-2) * (qfield.Q - qfield.q_pow(-1))
            / (qfield.q_pow(n) + qfield.q_pow(-n)))


def generators_up_to(index_bound: int) -> List[Generator]:
    """The first index_bound members of each of the four families."""
    gens: List[Generator] = []
    for k in range(index_bound):
        gens.append(wm(k))
        gens.append(wp(k + 1))
        gens.append(g_(k + 1))
        gens.append(gt_(k + 1))
    return gens


def check_central(n: int, index_bound: int = 6) -> Report:
    """Certify [Z_n, g] = 0 for every generator up to the index bound."""
    report = Report(f"central-n{n}")
    zn = z_n(n).as_poly
    for g in generators_up_to(index_bound):
        c = rewrite.normal_form(commutator(zn, NCPoly.gen(g)))
        report.add(f"[Z_{n},{g.text()}]", c.is_zero(),
                   "" if c.is_zero() else "nonzero commutator")
    return report


# -- generator recovery --------------------------------------------------------


def recover_generators(N: int, zs=None) -> Dict[Generator, NCPoly]:
    """Rebuild every generator up to level N from the degree-one pair.

    zs maps n to the n-th central element (CentralElement or NCPoly);
    missing entries are an error.  Returns the recovered polynomial for
    each generator, in normal form.
    """
    if N < 1:
        raise ValueError("N >= 1 required")
    if zs is None:
        zs = {n: z_n(n) for n in range(1, N + 1)}
    table: Dict[Generator, NCPoly] = {
        wm(0): NCPoly.gen(wm(0)),
        wp(1): NCPoly.gen(wp(1)),
    }

    def elem(family: Family, k: int) -> NCPoly:
        if family == Family.G and k == 0:
            return NCPoly.scalar(qfield.g0_const())
        if family == Family.Gtilde and k == 0:
            return NCPoly.scalar(qfield.g0_const())
        if family == Family.G:
            g = g_(k)
        elif family == Family.Gtilde:
            g = gt_(k)
        elif family == Family.Wplus:
            g = wp(k + 1)
        else:
            g = wm(k)
        try:
            return table[g]
        except KeyError:
            raise KeyError(f"recursion touched {g.text()} before recovery") from None

    q = qfield.q_pow
    q2 = qfield.q_int(2)
    rho_sq_inv = ((q(2) - q(-2)) ** 2).inverse()
    for n in range(1, N + 1):
        zn = zs[n]
        zn_poly = zn.as_poly if isinstance(zn, CentralElement) else zn
        zbar = rewrite.normal_form(z_bar_expanded_poly(n, elem))
        w0, w1 = table[wm(0)], table[wp(1)]
        wn = table[wp(n)]
        br = rewrite.normal_form(commutator(w0, wn))
        qm = qfield.Q - q(-1)
        gn = ((zbar - zn_poly) * qm - br * (q(n) * q2)) * (
            (q(n) + q(-n)).inverse())
        gn = rewrite.normal_form(gn)
        table[g_(n)] = gn
        table[gt_(n)] = rewrite.normal_form(gn + br * q2)
        table[wm(n)] = rewrite.normal_form(
            wn - q_commutator(w0, gn) * rho_sq_inv)
        w1mn = table[wm(n - 1)]
        table[wp(n + 1)] = rewrite.normal_form(
            w1mn - q_commutator(gn, w1) * rho_sq_inv)
    return table


def check_recovery(N: int) -> Report:
    report = Report(f"recover-{N}")
    table = recover_generators(N)
    for n in range(1, N + 1):
        for g in (g_(n), gt_(n), wm(n), wp(n + 1)):
            ok = table[g] == NCPoly.gen(g)
            report.add(f"recovered {g.text()}", ok,
                       "" if ok else f"got {table[g]!r}")
    return report


# -- matrix factorization --------------------------------------------------------


def _matrix_pair(order: int):
    m = order + 4
    q = qfield.q_pow
    inv = (q(2) - q(-2)).inverse()
    swm = subst_ST(Family.Wminus, "S", "times_ST_arg", m)
    swp = subst_ST(Family.Wplus, "S", "times_ST_arg", m)
    twm = subst_ST(Family.Wminus, "T", "times_ST_arg", m)
    twp = subst_ST(Family.Wplus, "T", "times_ST_arg", m)
    gs = subst_ST(Family.G, "S", "plain", m)
    gts = subst_ST(Family.Gtilde, "S", "plain", m)
    g_T = subst_ST(Family.G, "T", "plain", m)
    gt_T = subst_ST(Family.Gtilde, "T", "plain", m)
    left = [
        [swp.shift("t", 1) * q(-1) - swm * qfield.Q, gs * inv],
        [gts * inv, swp.shift("t", -1) * qfield.Q - swm * q(-1)],
    ]
    right = [
        [twm * qfield.Q - twp.shift("t", -1) * q(-1), g_T * inv],
        [gt_T * inv, twm * q(-1) - twp.shift("t", 1) * qfield.Q],
    ]
    return left, right


def check_matrix_factorization(order: int) -> Report:
    """Both products of the two structured matrices equal Z(t) times I."""
    report = Report("matrix-factorization")
    z = z_series(order)
    left, right = _matrix_pair(order)

    def prod(m1, m2):
        return [[m1[i][0] * m2[0][j] + m1[i][1] * m2[1][j] for j in range(2)]
                for i in range(2)]

    for tag, m1, m2 in (("LR", left, right), ("RL", right, left)):
        product = prod(m1, m2)
        for i in range(2):
            for j in range(2):
                entry = product[i][j].normal_form()
                if i == j:
                    # subtraction restricts to the common known window
                    ok = (entry - z).is_zero()
                    report.add(f"{tag}[{i + 1}{j + 1}] = Z(t)", ok)
                else:
                    ok = entry.is_zero()
                    report.add(f"{tag}[{i + 1}{j + 1}] = 0", ok)
    return report


# -- the two degree-one generators ------------------------------------------------


def dolan_grady_polys():
    """The two cubic relations of the degree-one pair, as LHS - RHS."""
    w0, w1 = NCPoly.gen(wm(0)), NCPoly.gen(wp(1))
    c = (qfield.q_pow(2) - qfield.q_pow(-2)) ** 2
    inner = q_commutator(w0, w1)
    mid = q_commutator(w0, inner, -1)
    first = commutator(w0, mid) - c * commutator(w1, w0)
    inner2 = q_commutator(w1, w0)
    mid2 = q_commutator(w1, inner2, -1)
    second = commutator(w1, mid2) - c * commutator(w0, w1)
    return first, second


def check_dolan_grady() -> Report:
    report = Report("dolan-grady")
    first, second = dolan_grady_polys()
    r1 = rewrite.normal_form(first)
    r2 = rewrite.normal_form(second)
    report.add("first relation", r1.is_zero())
    report.add("second relation", r2.is_zero())
    report.add("symmetry image", sigma(first) == second)
    return report


def check_appendix_b() -> Report:
    """The transform tables: every row, letter for letter."""
    report = Report("appendix-b")
    q2 = qfield.q_int(2)

    def entry(rows):
        out = NCPoly.zero()
        for coeff_int, pw, letter in rows:
            out = out + NCPoly.gen(letter) * (qfield.of(coeff_int) * q2 ** (-pw))
        return out

    wminus_rows = {
        0: [(1, 0, wm(0))],
        1: [(1, 0, wm(1))],
        2: [(1, 0, wm(2)), (-1, 2, wm(0))],
        3: [(1, 0, wm(3)), (-2, 2, wm(1))],
        4: [(1, 0, wm(4)), (-3, 2, wm(2)), (1, 4, wm(0))],
        5: [(1, 0, wm(5)), (-4, 2, wm(3)), (3, 4, wm(1))],
        6: [(1, 0, wm(6)), (-5, 2, wm(4)), (6, 4, wm(2)), (-1, 6, wm(0))],
        7: [(1, 0, wm(7)), (-6, 2, wm(5)), (10, 4, wm(3)), (-4, 6, wm(1))],
        8: [(1, 0, wm(8)), (-7, 2, wm(6)), (15, 4, wm(4)), (-10, 6, wm(2)),
            (1, 8, wm(0))],
    }
    for n, rows in wminus_rows.items():
        ok = w_ddown(-n) == entry(rows)
        report.add(f"Wminus ddown n={n}", ok)
    wplus_rows = {
        n: [(c, pw, wp(g.k + 1)) for (c, pw, g) in rows]
        for n, rows in wminus_rows.items()
    }
    for n, rows in wplus_rows.items():
        ok = w_ddown(n + 1) == entry(rows)
        report.add(f"Wplus ddown n={n}", ok)
    g_rows = {
        1: [(1, 0, g_(1))],
        2: [(1, 0, g_(2))],
        3: [(1, 0, g_(3)), (-1, 2, g_(1))],
        4: [(1, 0, g_(4)), (-2, 2, g_(2))],
        5: [(1, 0, g_(5)), (-3, 2, g_(3)), (1, 4, g_(1))],
        6: [(1, 0, g_(6)), (-4, 2, g_(4)), (3, 4, g_(2))],
        7: [(1, 0, g_(7)), (-5, 2, g_(5)), (6, 4, g_(3)), (-1, 6, g_(1))],
        8: [(1, 0, g_(8)), (-6, 2, g_(6)), (10, 4, g_(4)), (-4, 6, g_(2))],
        9: [(1, 0, g_(9)), (-7, 2, g_(7)), (15, 4, g_(5)), (-10, 6, g_(3)),
            (1, 8, g_(1))],
    }
    for n, rows in g_rows.items():
        report.add(f"G down n={n}", g_down(n) == entry(rows))
        trows = [(c, pw, gt_(g.k + 1)) for (c, pw, g) in rows]
        report.add(f"Gtilde down n={n}", gt_down(n) == entry(trows))
    report.add("G down n=0 is the scalar",
               g_down(0) == NCPoly.scalar(qfield.g0_const()))
    report.add("Gtilde down n=0 is the scalar",
               gt_down(0) == NCPoly.scalar(qfield.g0_const()))
    return report
