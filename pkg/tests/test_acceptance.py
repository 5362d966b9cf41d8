"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import itertools
import json
import time

import numpy as np

from zpwave import oracle
from zpwave.cli import main
from zpwave.frames import (
    build_y_matrix,
    canonical_dual_and_reconstruct,
    coefficients_direct,
    coefficients_fourier,
    energy_analytic_formula,
    energy_coset_formula,
    frame_spectrum,
    is_frame,
    is_tight,
    rows_nonzero,
    wavelet_system,
)
from zpwave.group import act, compose, group_elements, invert
from zpwave.io import write_signal
from zpwave.numtheory import prime_context, subgroup_of_order
from zpwave.signal import (
    default_tolerance,
    delta,
    dft,
    dilate,
    idft,
    inner_product,
    modulate,
    ones,
    translate,
)

from conftest import ACCEPTANCE_RESULTS, SMALL_PRIMES, prime_divisor_pairs, random_signal


class Criterion:
    def __init__(self, label, budget):
        self.label, self.budget = label, budget
        self.checks = 0
        self.worst = 0.0
        self.failures = []
        self.note = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def check(self, ok, what=""):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None and elapsed > self.budget:
            self.failures.append(f"took {elapsed:.2f}s > {self.budget}s")
        ok = exc_type is None and not self.failures
        detail = f"{self.checks} checks, worst {self.worst:.2e}, {elapsed:.2f}s{self.note}"
        if self.failures:
            detail += f", first failure: {self.failures[0]}"
        elif exc_type is not None:
            detail += f", error: {exc!r}"
        ACCEPTANCE_RESULTS[self.label] = (ok, detail)
        assert not self.failures, self.failures[:5]
        return False

    def track(self, value):
        self.worst = max(self.worst, float(value))
        return value


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def test_1_coset_energy_theorem():
    rng = np.random.default_rng(1)
    with Criterion("1 coset energy theorem (rtol 1e-10)", 10) as c:
        for p, M in prime_divisor_pairs():
            sub = subgroup_of_order(prime_context(p), M)
            for _ in range(50):
                x, y = random_signal(rng, p), random_signal(rng, p)
                brute = oracle.naive_energy(x, y, sub)
                for e in (energy_coset_formula(x, y, sub), energy_analytic_formula(x, y, sub)):
                    c.check(c.track(rel(brute, e)) < 1e-10, f"p={p} M={M}")


def test_2_fourier_coefficient_formula():
    rng = np.random.default_rng(2)
    with Criterion("2 Fourier coefficient formula (atol 1e-10)", 10) as c:
        for p, M in prime_divisor_pairs():
            sub = subgroup_of_order(prime_context(p), M)
            for _ in range(50):
                x, y = random_signal(rng, p, unit=True), random_signal(rng, p, unit=True)
                system = wavelet_system(y, sub)
                dev = np.max(np.abs(coefficients_fourier(x, system).values - coefficients_direct(x, system).values))
                c.check(c.track(dev) < 1e-10, f"p={p} M={M}")


def windows_for(p, sub, rng):
    """Deltas, constants, coset-supported spectra and random windows."""
    out = [delta(p, k) for k in range(p)] + [ones(p), (2 - 1j) * ones(p)]
    cosets = [list(h) for h in sub.cosets]
    for t, h in enumerate(cosets):
        spec = np.zeros(p, dtype=complex)
        spec[0] = 1.0
        spec[h] = random_signal(rng, len(h))
        out.append(idft(spec))  # dc plus a single coset
        spec = dft(random_signal(rng, p))
        spec[h] = 0
        out.append(idft(spec))  # every coset but one
        spec = np.zeros(p, dtype=complex)
        spec[h] = random_signal(rng, len(h))
        out.append(idft(spec))  # no dc
        spec = np.zeros(p, dtype=complex)
        spec[0] = 1.0
        for h2 in cosets:
            spec[h2[rng.integers(len(h2))]] = 1.0  # one frequency per coset
        out.append(idft(spec))
    for _ in range(100):
        out.append(random_signal(rng, p))
    for _ in range(30):
        spec = dft(random_signal(rng, p))
        spec[rng.random(p) < 0.5] = 0
        if np.any(spec):
            out.append(idft(spec))
    return out


CHARACTERIZATION_PAIRS = prime_divisor_pairs((2,) + SMALL_PRIMES)


def test_3_frame_characterization_vs_span():
    rng = np.random.default_rng(3)
    with Criterion("3 frame characterization <=> spanning", 30) as c:
        indeterminate = frames = 0
        for p, M in CHARACTERIZATION_PAIRS:
            ctx = prime_context(p)
            sub = subgroup_of_order(ctx, M)
            for y in windows_for(p, sub, rng):
                system = wavelet_system(y, sub, ctx)
                verdict = oracle.span_verdict(system.vectors, 1e-8 * np.linalg.norm(y))
                if verdict == "indeterminate":
                    indeterminate += 1
                    continue
                ours = is_frame(y, sub, ctx)
                frames += ours
                c.check(ours == (verdict == "spanning"), f"p={p} M={M} ours={ours} oracle={verdict}")
        c.check(0 < frames < c.checks, "sweep did not exercise both verdicts")
        c.note = f", {frames} frames, {indeterminate} indeterminate excluded"


def test_4_spectrum_vs_oracle():
    rng = np.random.default_rng(4)
    with Criterion("4 spectrum vs oracle eigenvalues (rtol 1e-8)", 20) as c:
        for p, M in prime_divisor_pairs((5, 7, 11)):
            ctx = prime_context(p)
            sub = subgroup_of_order(ctx, M)
            windows = [delta(p), idft(np.exp(2j * np.pi * rng.random(p)))]
            windows += [random_signal(rng, p) for _ in range(3)]
            for y in windows:
                spec = frame_spectrum(y, sub, ctx)
                lo, hi = oracle.hermitian_extremal_eigenvalues(
                    oracle.assemble_frame_operator(wavelet_system(y, sub, ctx))
                )
                c.check(c.track(rel(spec.min, lo)) < 1e-8, f"min p={p} M={M}")
                c.check(c.track(rel(spec.max, hi)) < 1e-8, f"max p={p} M={M}")


def test_5_tight_frame_proposition():
    rng = np.random.default_rng(5)
    with Criterion("5 tight-frame proposition", 5) as c:
        for p, M in prime_divisor_pairs():
            sub = subgroup_of_order(prime_context(p), M)
            v = is_tight(delta(p), sub)
            c.check(v.is_tight and c.track(abs(v.alpha - M)) < 1e-12, f"delta p={p} M={M}")
            for amp in (0.3, 1.0, 2.5):
                y = idft(amp * np.exp(2j * np.pi * rng.random(p)))
                v = is_tight(y, sub)
                c.check(v.is_tight and c.track(rel(v.alpha, p * M * amp**2)) < 1e-12, f"flat p={p} M={M}")
            c.check(not is_frame(ones(p), sub), f"ones p={p} M={M}")


def test_6_reconstruction():
    rng = np.random.default_rng(6)
    with Criterion("6 canonical dual reconstruction (rtol 1e-10)", 10) as c:
        for p, M in prime_divisor_pairs():
            ctx = prime_context(p)
            sub = subgroup_of_order(ctx, M)
            for _ in range(20):
                y = random_signal(rng, p)
                while not is_frame(y, sub, ctx):
                    y = random_signal(rng, p)
                x = random_signal(rng, p)
                rec = canonical_dual_and_reconstruct(x, wavelet_system(y, sub, ctx))
                err = np.linalg.norm(rec - x) / np.linalg.norm(x)
                c.check(c.track(err) < 1e-10, f"p={p} M={M}")


def test_7_group_theory():
    rng = np.random.default_rng(7)
    with Criterion("7 wavelet group axioms and action", 10) as c:
        for p in (3, 5, 7, 11, 13):
            ctx = prime_context(p)
            elems = group_elements(ctx)
            c.check(len(set(elems)) == p * (p - 1), f"order p={p}")
            e = (1, 0)
            for g in elems:
                gi = invert(g, ctx)
                c.check(compose(e, g, ctx) == g == compose(g, e, ctx), f"identity p={p}")
                c.check(compose(g, gi, ctx) == e == compose(gi, g, ctx), f"inverse p={p}")
                c.check(all(compose(compose(g, (1, k), ctx), gi, ctx).m == 1 for k in range(p)), f"normal p={p}")
            witness = next(
                (g for g in elems for m in range(2, p) if compose(compose(g, (m, 0), ctx), invert(g, ctx), ctx).k),
                None,
            )
            c.check(witness is not None, f"non-normality witness p={p}")
            if p <= 7:
                triples = itertools.product(elems, repeat=3)
                pairs = itertools.product(elems, repeat=2)
            else:
                idx = rng.integers(len(elems), size=(10_000, 3))
                triples = ((elems[i], elems[j], elems[k]) for i, j, k in idx)
                pairs = ((elems[i], elems[j]) for i, j, _ in idx)
            for g, h, k in triples:
                c.check(compose(compose(g, h, ctx), k, ctx) == compose(g, compose(h, k, ctx), ctx), f"assoc p={p}")
            y = random_signal(rng, p)
            ny = np.linalg.norm(y)
            for g, h in pairs:
                gy = act(g, y, ctx)
                c.check(c.track(abs(np.linalg.norm(gy) - ny) / ny) < 1e-12, f"unitary p={p}")
                c.check(np.array_equal(act(g, act(h, y, ctx), ctx), act(compose(g, h, ctx), y, ctx)), f"hom p={p}")


def test_8_operator_identities():
    rng = np.random.default_rng(8)
    with Criterion("8 operator identities (1e-12)", 5) as c:
        for p in SMALL_PRIMES:
            ctx = prime_context(p)
            inv = ctx.inverses
            for _ in range(100):
                x, y = random_signal(rng, p, unit=True), random_signal(rng, p, unit=True)
                k, l = (int(v) for v in rng.integers(p, size=2))
                m, m2 = (int(v) for v in rng.integers(1, p, size=2))
                xh = dft(x, ctx)
                errs = [
                    abs(np.linalg.norm(xh) - 1.0),
                    abs(inner_product(x, y) - inner_product(xh, dft(y, ctx))),
                    np.max(np.abs(idft(xh, ctx) - x)),
                    np.max(np.abs(dft(translate(x, k), ctx) - modulate(xh, k))),
                    np.max(np.abs(dft(modulate(x, l), ctx) - translate(xh, p - l))),
                    np.max(np.abs(dilate(translate(x, k), m, ctx) - translate(dilate(x, m, ctx), m * k % p))),
                    np.max(np.abs(dilate(dilate(x, m2, ctx), m, ctx) - dilate(x, m * m2 % p, ctx))),
                    np.max(np.abs(dilate(modulate(x, l), m, ctx) - modulate(dilate(x, m, ctx), inv[m] * l % p))),
                    np.max(np.abs(dft(dilate(x, m, ctx), ctx) - dilate(xh, inv[m], ctx))),
                    abs(inner_product(dilate(x, m, ctx), y) - inner_product(x, dilate(y, inv[m], ctx))),
                    np.max(np.abs(dilate(dilate(x, m, ctx), inv[m], ctx) - x)),
                    abs(inner_product(translate(x, k), y) - inner_product(x, translate(y, p - k))),
                    abs(inner_product(modulate(x, l), y) - inner_product(x, modulate(y, p - l))),
                    abs(np.linalg.norm(dilate(x, m, ctx)) - 1.0),
                ]
                c.check(c.track(max(errs)) < 1e-12, f"p={p}")


def test_9_matrix_criterion():
    rng = np.random.default_rng(3)  # the same windows as criterion 3
    with Criterion("9 matrix criterion vs coset condition", 5) as c:
        for p, M in CHARACTERIZATION_PAIRS:
            ctx = prime_context(p)
            sub = subgroup_of_order(ctx, M)
            eps, a = ctx.primitive_root, sub.index_a
            for y in windows_for(p, sub, rng):
                yhat = dft(y, ctx)
                tol = default_tolerance(yhat)
                rows = rows_nonzero(build_y_matrix(y, sub, ctx), tol)
                cond_ii = [
                    any(abs(yhat[pow(eps, t, p) * m % p]) > tol for m in sub.elements) for t in range(a)
                ]
                c.check(rows == cond_ii, f"rows p={p} M={M}")
                c.check(is_frame(y, sub, ctx) == (abs(yhat[0]) > tol and all(rows)), f"verdict p={p} M={M}")


def test_10_cli_end_to_end(tmp_path, capsys):
    def run(*argv):
        out = tmp_path / "out.txt"
        status = main(list(argv) + ["--out", str(out)])
        capsys.readouterr()
        return status, out.read_bytes()

    def twice(*argv):
        first, second = run(*argv), run(*argv)
        return first, first == second

    d7, o7, d5, z5 = (tmp_path / n for n in ("d7.json", "o7.json", "d5.json", "z5.json"))
    write_signal(d7, delta(7))
    write_signal(o7, ones(7))
    write_signal(d5, delta(5))
    write_signal(z5, np.zeros(5))
    rng = np.random.default_rng(10)
    r11, s11 = tmp_path / "r11.json", tmp_path / "s11.json"
    write_signal(r11, random_signal(rng, 11, unit=True))
    write_signal(s11, random_signal(rng, 11, unit=True))

    with Criterion("10 CLI end-to-end", 5) as c:
        (status, body), same = twice("report", "--p", "7", "--order-m", "3", "--window", str(d7), "--seed", "1")
        rep = json.loads(body)
        c.check(status == 0 and same, "report delta exit/determinism")
        c.check(max(abs(rep[k] - 3) for k in ("A", "B", "alpha")) < 1e-12 and rep["is_tight"], "report A=B=3")

        (status, body), same = twice("report", "--p", "7", "--order-m", "3", "--window", str(o7))
        c.check(status == 2 and same and json.loads(body)["is_frame"] is False, "report ones")

        c.check(main(["report", "--p", "6", "--window", str(d7)]) == 1, "non-prime exit 1")
        capsys.readouterr()

        (status, body), same = twice(
            "coeffs", "--p", "5", "--full", "--window", str(d5), "--signal", str(d5), "--format", "csv"
        )
        rows = [line.split(",") for line in body.decode().splitlines()[1:]]
        c.check(status == 0 and same and len(rows) == 20, "coeffs delta rows")
        c.check(all((abs(float(re)) > 0.5) == (k == "0") for _, k, re, _ in rows), "coeffs delta support")

        (status, body), same = twice("coeffs", "--p", "5", "--full", "--window", str(d5), "--signal", str(z5))
        c.check(
            status == 0 and same and all(v["re"] == v["im"] == 0 for v in json.loads(body)["coefficients"]),
            "coeffs zero",
        )

        status = main(["coeffs", "--p", "11", "--window", str(r11), "--signal", str(s11), "--verify"])
        dev = float(capsys.readouterr().err.strip().rsplit(" ", 1)[1])
        c.check(status == 0 and c.track(dev) < 1e-10, "coeffs --verify")

        (status, body), same = twice("group", "--p", "7", "--order-m", "3")
        c.check(status == 0 and same and json.loads(body)["cosets"] == [[1, 2, 4], [3, 6, 5]], "group p=7")
        (status, body), _ = twice("group", "--p", "5", "--full")
        cos = json.loads(body)["cosets"]
        c.check(len(cos) == 1 and sorted(cos[0]) == [1, 2, 3, 4], "group p=5 full")
        (status, body), _ = twice("group", "--p", "13", "--order-m", "4")
        c.check(json.loads(body)["subgroup"] == [1, 5, 8, 12], "group p=13")

        (status, body), same = twice("dual", "--p", "11", "--order-m", "5", "--window", str(r11), "--seed", "42")
        c.check(status == 0 and same, "dual seeded determinism")
