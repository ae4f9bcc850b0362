"""The ten acceptance checks, each returning a :class:`Check` with per-row detail.

Rows flagged ``"diagnostic": True`` are reported but do not decide the outcome.
"""
from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field

from . import algebra as alg
from . import cochains as co
from . import expected as ex
from . import homology as hom
from . import representatives as reps
from . import simplicial as simp
from .ainfinity import (X_TENSOR, W_BETA, BETA_M6_FACTOR, Structure, beta, coeff_extract, delta_f3_vs_m4,
                        gamma_eval, random_gauge, stasheff_operation)
from .eisenstein import (EisensteinContext, check_eisenstein_relations, format_tau, g10_sign, j_direct,
                         route_agreement)


@dataclass
class Check:
    criterion: int
    title: str
    rows: list[dict] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.rows if not r.get("diagnostic"))

    def line(self) -> str:
        bad = sum(1 for r in self.rows if not r.get("diagnostic") and not r["pass"])
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({bad} failing rows)" if bad else ""
        note = f" - {self.note}" if self.note else ""
        return f"[{status}] criterion {self.criterion}: {self.title}{tail}{note}"


def _c(z: complex) -> str:
    z = complex(z)
    return f"{z.real + 0.0:.12g}{z.imag + 0.0:+.12g}i"


def _table_rows(kind: str, source: str, offset: int, got: list, want: list[int], nmin: int = 1) -> list[dict]:
    return [{"kind": kind, "module": source, "offset": offset, "n": nmin + i, "dim": r.dim, "expected": w,
             "pass": r.dim == w} for i, (r, w) in enumerate(zip(got, want))]


def criterion_1(mode="modular", seed=0, nmax=ex.NMAX) -> Check:
    chk = Check(1, "HH tables of B on three diagonals")
    for off, table in ex.HH_B.items():
        got = hom.dims_table("B", off, nmax, mode, seed)
        chk.rows += _table_rows("HH", "B", off, got, ex.expected_row(table, nmax))
    return chk


def criterion_2(mode="modular", seed=0, nmax=ex.NMAX) -> Check:
    chk = Check(2, "B0/B1 and B items, small-coefficient diagonals")
    for group, items in (("B0/B1", ex.ITEMS_B0_B1), ("B", ex.ITEMS_B)):
        for letter, cells in items.items():
            for module, n, m, want in cells:
                d = hom.hh_dim(module, n, m, mode, seed).dim
                chk.rows.append({"kind": "HH", "item": f"{group} {letter}", "module": module, "n": n, "m": m,
                                 "dim": d, "expected": want, "pass": d == want})
    for module, diags in ex.HH_SMALL.items():
        for off, table in diags.items():
            got = hom.dims_table(module, off, nmax, mode, seed)
            chk.rows += _table_rows("HH", module, off, got, ex.expected_row(table, nmax))
    return chk


def criterion_3(mode="modular", seed=0, nmax=ex.NMAX) -> Check:
    chk = Check(3, "chain homology tables and representatives")
    for label, diags in ex.CHAIN.items():
        for shift, table in diags.items():
            got = hom.chain_table(label, shift, nmax, mode, seed)
            chk.rows += _table_rows("H", label, shift, got, ex.expected_row(table, nmax))
    for name in reps.TABLES:
        for r in reps.certify_table(name, mode, seed, nmax):
            chk.rows.append({"kind": "representative", **r.record()})
    for r in reps.certify_sigma(mode, seed):
        chk.rows.append({"kind": "sigma", **r.record()})
    return chk


def criterion_4(nmax=12) -> Check:
    chk = Check(4, "gap complexes and their sphere classes")
    for n in range(1, nmax + 1):
        K = simp.build_delta_complex(n)
        dims = simp.reduced_homology_dims(K)
        chk.rows.append({"kind": "homology", "n": n, "reduced_dims": dims,
                         "expected_sphere": list(simp.expected_homology(n)),
                         "boundary_squared_zero": simp.boundary_squared_zero(K),
                         "pass": simp.matches_pattern(n, dims) and simp.boundary_squared_zero(K)})
    for name, chain, ns in simp.REPRESENTATIVES:
        for n in ns:
            res = simp.verify_sphere_class(n, chain)
            chk.rows.append({"kind": "class", "name": name, **res, "pass": res["found"]})
    return chk


def criterion_5(taus=ex.ACCEPT_TAUS, tol=1e-9, route_tol=1e-8) -> Check:
    chk = Check(5, "Eisenstein relations and series agreement")
    for tau in taus:
        ctx = EisensteinContext(tau)
        for r in check_eisenstein_relations(ctx, tol):
            chk.rows.append({"kind": "relation", **r})
        for r in check_eisenstein_relations(ctx, tol, corrected=True)[3:4]:
            chk.rows.append({"kind": "relation (corrected coefficient)", **r, "diagnostic": True})
        chk.rows.append({"kind": "g10 sign", "tau": format_tau(ctx.tau), "sign": g10_sign(ctx),
                         "pass": True, "diagnostic": True})
        for r in route_agreement(ctx):
            chk.rows.append({"kind": "routes", "series": r["series"], "tau": r["tau"], "q": _c(r["q"]),
                             "lattice": _c(r["lattice"]), "difference": r["difference"],
                             "pass": r["difference"] < route_tol})
    if not chk.passed:
        chk.note = "g41 = -5 g30 g10 + 7/10 g50 fails; with -4 it holds"
    return chk


def criterion_6(taus=("0+1i", "0.3+1.2i"), tol=1e-9) -> Check:
    chk = Check(6, "delta f3 = eps m4")
    eps = set()
    for tau in taus:
        r = delta_f3_vs_m4(EisensteinContext(tau))
        eps.add(r["epsilon"])
        chk.rows.append({"tau": tau, **r, "pass": r["residual"] < tol})
    chk.rows.append({"kind": "global sign", "epsilon": sorted(eps), "pass": len(eps) == 1})
    return chk


def criterion_7(taus=ex.ACCEPT_TAUS, tol=1e-8) -> Check:
    chk = Check(7, "beta(m6'), gamma(m8') and m4' = 0")
    for tau in taus:
        ctx = EisensteinContext(tau)
        S = Structure(ctx)
        t4e4 = ctx.t ** 4 * ctx.e("e4")
        t6e6 = ctx.t ** 6 * ctx.e("e6")
        b, g = S.beta_m6(), S.gamma_m8()
        tx = coeff_extract(S.m_prime(6), X_TENSOR, alg.ID_L)
        tw = coeff_extract(S.m_prime(6), {W_BETA: 1}, alg.THETA)
        m4p = co.max_abs(S.m_prime(4), alg.all_words(4))
        chk.rows += [
            {"quantity": "beta(m6') + 5 t^4 e4", "tau": tau, "value": _c(b), "residual": abs(b + 5 * t4e4),
             "pass": abs(b + 5 * t4e4) < tol},
            {"quantity": "gamma_eval(m8') + 35 t^6 e6", "tau": tau, "value": _c(g),
             "residual": abs(g + 35 * t6e6), "pass": abs(g + 35 * t6e6) < tol},
            {"quantity": "max |m4'|", "tau": tau, "value": m4p, "pass": m4p == 0},
        ]
        if abs(t4e4) > 1e-12:
            chk.rows += [
                {"quantity": "t_x(m6') / t^4 e4", "tau": tau, "value": _c(tx / t4e4),
                 "pass": abs(tx / t4e4 - ex.TX_M6) < 1e-8, "diagnostic": True},
                {"quantity": "t_w(m6') / t^4 e4", "tau": tau, "value": _c(tw / t4e4),
                 "pass": abs(tw / t4e4 - ex.TW_M6) < 1e-8, "diagnostic": True},
                {"quantity": "beta(m6') / t^4 e4", "tau": tau, "value": _c(b / t4e4),
                 "pass": abs(b / t4e4 - BETA_M6_FACTOR) < 1e-8, "diagnostic": True},
            ]
    if not chk.passed:
        chk.note = "t_x = -10 and t_w = +5 (times t^4 e4) as expected, so beta = t_x - t_w = -15, not -5"
    return chk


def criterion_8(taus=ex.J_TAUS, rel_tol=1e-6, abs_tol=1e-4) -> Check:
    chk = Check(8, "j recovered from m6' and m8'")
    for tau in taus:
        ctx = EisensteinContext(tau)
        jr, jd = Structure(ctx).recover_j(), j_direct(ctx)
        rel = abs(jr / jd - 1)
        chk.rows.append({"tau": tau, "recovered": _c(jr), "direct": _c(jd), "relative_error": rel,
                         "pass": rel < rel_tol})
    for tau, want in (("0+1i", 1728), (complex(0.5, 3 ** 0.5 / 2), 0)):
        ctx = EisensteinContext(tau)
        jr = Structure(ctx).recover_j()
        chk.rows.append({"tau": format_tau(ctx.tau), "recovered": _c(jr), "direct": want,
                         "absolute_error": abs(jr - want), "pass": abs(jr - want) < abs_tol})
    return chk


def _square_zero_rows(nmax: int) -> list[dict]:
    rows = []
    bad = checked = 0
    for module in alg.MODULES:
        for n in range(0, nmax):
            for m in range(-n - 1, 2):
                A = hom.hochschild_delta_matrix(module, n, m)
                Bm = hom.hochschild_delta_matrix(module, n + 1, m)
                checked += 1
                if A.rows and A.cols and Bm.rows and not Bm.matmul(A).is_zero():
                    bad += 1
    rows.append({"property": "delta^2 = 0", "cells": checked, "failures": bad, "pass": bad == 0})
    bad = checked = 0
    for label in hom.CHAIN_LABELS:
        for n in range(2, nmax + 2):
            for m in range(0, n + 1):
                A = hom.chain_boundary_matrix(label, n - 1, m)
                Bm = hom.chain_boundary_matrix(label, n, m)
                checked += 1
                if A.rows and A.cols and Bm.cols and not A.matmul(Bm).is_zero():
                    bad += 1
    rows.append({"property": "d^2 = 0", "cells": checked, "failures": bad, "pass": bad == 0})
    return rows


def criterion_9(seed=0, taus=ex.ACCEPT_TAUS, tol=1e-8, nmax=9) -> Check:
    chk = Check(9, "property suites")
    rng = random.Random(seed)
    chk.rows += _square_zero_rows(nmax)
    for tau in taus:
        S = Structure(EisensteinContext(tau))
        for k in (6, 8):
            r = co.max_abs(co.coboundary(S.m_prime(k)), alg.all_words(k + 1))
            chk.rows.append({"property": f"delta m{k}' = 0", "tau": tau, "residual": r, "pass": r < tol})
    worst_b = worst_g = 0.0
    for _ in range(20):
        psi5 = co.random_cochain(5, -4, rng)
        psi7 = co.random_cochain(7, -6, rng)
        worst_b = max(worst_b, abs(beta(co.coboundary(psi5))))
        worst_g = max(worst_g, abs(gamma_eval(co.coboundary(psi7))))
    chk.rows.append({"property": "beta(delta psi) = 0", "samples": 20, "residual": worst_b, "pass": worst_b < tol})
    chk.rows.append({"property": "gamma_eval(delta psi) = 0", "samples": 20, "residual": worst_g,
                     "pass": worst_g < tol})
    ctx = EisensteinContext("0.3+1.2i")
    j0 = Structure(ctx).recover_j()
    worst = 0.0
    for _ in range(5):
        j1 = Structure(ctx, h=random_gauge(rng)).recover_j()
        worst = max(worst, abs(j1 / j0 - 1))
    chk.rows.append({"property": "recover_j invariant under f3 + delta h", "samples": 5, "relative": worst,
                     "pass": worst < 1e-8})
    chk.rows.append(_bracket_row(rng, 50, tol))
    return chk


def _bracket_row(rng: random.Random, samples: int, tol: float) -> dict:
    m2 = co.product()
    eps = None
    worst = 0.0
    tried = 0
    cells = [(n, m) for n in range(1, 5) for m in range(-n, 2) if hom.cochain_basis("B", n, m)]
    while tried < samples:
        n, m = cells[tried % len(cells)]
        f = co.random_cochain(n, m, rng)
        br, d = co.bracket(m2, f), co.coboundary(f)
        words = alg.all_words(n + 1)
        if eps is None:
            for w in words:
                a, b = br(w), d(w)
                if b:
                    y = next(iter(b))
                    eps = 1 if abs(a.get(y, 0) - b[y]) <= abs(a.get(y, 0) + b[y]) else -1
                    break
        if eps is not None:
            worst = max(worst, co.max_difference(br, d, words, eps))
        tried += 1
    return {"property": "[m2, f] = eps' delta f", "samples": samples, "epsilon": eps, "residual": worst,
            "pass": eps is not None and worst < tol}


def criterion_10(taus=("0+1i", "0.3+1.2i"), kmax=8, tol=1e-8) -> Check:
    chk = Check(10, "Stasheff identities for m and m'")
    for tau in taus:
        S = Structure(EisensteinContext(tau))
        for structure, ops in (("m", S.m), ("m'", S.m_prime)):
            for k in range(3, kmax + 1):
                r = co.max_abs(stasheff_operation(ops, k), alg.all_words(k))
                row = {"structure": structure, "tau": tau, "k": k, "residual": r, "pass": r < tol}
                if r >= tol:
                    row["sign_table"] = _sign_table(ops, k)
                chk.rows.append(row)
                if structure == "m" and k in (5, 7):
                    u = co.max_abs(stasheff_operation(ops, k, "plain"), alg.all_words(k))
                    chk.rows.append({"structure": structure, "tau": tau, "k": k, "convention": "unsigned",
                                     "residual": u, "pass": True, "diagnostic": True})
        for k in range(2, kmax + 1):
            r = S.morphism_residual(k)
            chk.rows.append({"structure": "f: m -> m'", "tau": tau, "k": k, "residual": r, "pass": r < tol})
    return chk


def _sign_table(ops, k: int) -> list[dict]:
    out = []
    for s in range(2, k):
        for r in range(0, k - s + 1):
            t = k - s - r
            out.append({"r": r, "s": s, "t": t, "sign": (-1) ** (r + s * t)})
    return out


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


def run(which, mode="modular", seed=0) -> Check:
    fn = CRITERIA[which]
    if which in (1, 2, 3):
        return fn(mode, seed)
    if which == 9:
        return fn(seed)
    return fn()
