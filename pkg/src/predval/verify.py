"""The full property suite behind ``predval verify``."""

from dataclasses import dataclass

import numpy as np

from .games import make_unanimity_game
from .indices import (
    SemivalueWeights,
    banzhaf,
    binomial_semivalue,
    decisiveness,
    prediction_value,
    probabilistic_value,
    shapley,
)
from .measures import (
    CoalitionMeasure,
    ProbabilisticGame,
    shapley_inducing_measure,
    uniform_measure,
)
from .theory import (
    AXIOMS,
    PSI1,
    PSI2,
    PSI3,
    PSI4,
    PV,
    binomial_parameter,
    check_axiom,
    measure_for_binomial_semivalue,
    pv_equals_probabilistic_value,
    random_game,
    random_measure,
    random_product_measure,
    unanimity_deviation,
)

# axiom -> should it hold. Each counterexample is designed to break exactly one axiom.
EXPECTED_AXIOMS = {
    PV: {a: True for a in AXIOMS},
    PSI1: {"linearity": True, "consistency": True, "full_control": True, "iddp": False},
    PSI2: {"linearity": True, "consistency": True, "iddp": True, "full_control": False},
    PSI3: {"linearity": True, "full_control": True, "iddp": True, "consistency": False},
    PSI4: {"consistency": True, "full_control": True, "iddp": True, "linearity": False},
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self):
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag:<5} {self.name}: {self.detail}"


def axiom_checks(trials, seed, tol):
    results = []
    for value, expectations in EXPECTED_AXIOMS.items():
        for axiom, should_hold in expectations.items():
            report = check_axiom(value, axiom, trials=trials, seed=seed, tol=tol)
            verdict = "holds" if report.holds else "violated"
            if report.holds == should_hold:
                detail = f"{verdict} as expected ({report.cases} cases)"
            else:
                detail = f"{verdict}, expected to {'hold' if should_hold else 'fail'} ({report.cases} cases)"
            if report.witness is not None:
                w = report.witness
                detail += (
                    f" [witness: {w.description}; player {w.player + 1}: "
                    f"expected {w.expected:.6g}, got {w.actual:.6g}, dev {w.deviation:.3g}]"
                )
            results.append(CheckResult(f"{value.name} {axiom}", report.holds == should_hold, detail))
    return results


def product_measure_agreement(trials, seed, tol):
    """PV equals both decisiveness measures under product measures; Banzhaf if uniform."""
    worst = 0.0
    worst_uniform = 0.0
    for trial in range(trials):
        rng = np.random.default_rng([seed, 100, trial])
        n = int(rng.integers(2, 9))
        game = random_game(rng, n)
        G = ProbabilisticGame(game, random_product_measure(rng, n))
        xi = prediction_value(G)
        for side in ("plus", "minus"):
            worst = max(worst, float(np.max(np.abs(xi - decisiveness(G, side)))))
        U = ProbabilisticGame(game, uniform_measure(n))
        worst_uniform = max(worst_uniform, float(np.max(np.abs(prediction_value(U) - banzhaf(game)))))
    ok = worst < tol and worst_uniform < tol
    return CheckResult(
        "product measures: PV = Phi+ = Phi-, uniform: PV = Banzhaf",
        ok,
        f"max dev {worst:.3g} / {worst_uniform:.3g} over {trials} games",
    )


def shapley_inducing_check(trials, seed, tol):
    worst = 0.0
    for n in range(1, 9):
        plus = shapley_inducing_measure(n, "plus")
        minus = shapley_inducing_measure(n, "minus")
        for trial in range(trials):
            rng = np.random.default_rng([seed, 200 + n, trial])
            game = random_game(rng, n)
            phi = shapley(game)
            worst = max(
                worst,
                float(np.max(np.abs(decisiveness(ProbabilisticGame(game, plus), "plus") - phi))),
                float(np.max(np.abs(decisiveness(ProbabilisticGame(game, minus), "minus") - phi))),
            )
    return CheckResult(
        "Shapley-inducing measures: Phi+/Phi- = Shapley (n=1..8)",
        worst < tol,
        f"max dev {worst:.3g}",
    )


def probabilistic_value_checks(trials, seed, tol):
    worst = 0.0
    for trial in range(trials):
        rng = np.random.default_rng([seed, 300, trial])
        n = int(rng.integers(2, 7))
        P = random_product_measure(rng, n)
        family = pv_equals_probabilistic_value(P)
        if family is None:
            return [CheckResult("product P: probabilistic value = PV", False, f"no family for product measure (trial {trial})")]
        game = random_game(rng, n)
        diff = probabilistic_value(game, family) - prediction_value(ProbabilisticGame(game, P))
        worst = max(worst, float(np.max(np.abs(diff))))
    forward = CheckResult(
        "product P: probabilistic value with Q_i = P|i equals PV",
        worst < tol,
        f"max dev {worst:.3g} over {trials} games",
    )
    misses = 0
    smallest = np.inf
    for trial in range(trials):
        rng = np.random.default_rng([seed, 301, trial])
        n = int(rng.integers(2, 7))
        P = random_measure(rng, n)
        dev, _, _ = unanimity_deviation(P)
        smallest = min(smallest, dev)
        if pv_equals_probabilistic_value(P) is not None or dev <= 1e-6:
            misses += 1
    converse = CheckResult(
        "non-product P: some unanimity game separates Psi(Q=P|i) from PV",
        misses == 0,
        f"{trials - misses}/{trials} separated, smallest max deviation {smallest:.3g}",
    )
    return [forward, converse]


def binomial_checks(seed, tol):
    worst = 0.0
    worst_alpha = 0.0
    for p in (0.1, 0.25, 0.5, 0.9):
        for n in range(2, 9):
            rng = np.random.default_rng([seed, 400, n, int(p * 100)])
            alpha = binomial_parameter(SemivalueWeights.binomial(n, p))
            if alpha is None:
                return CheckResult("binomial semivalues are PVs", False, f"no alpha for p={p}, n={n}")
            worst_alpha = max(worst_alpha, abs(alpha - p / (1 - p)))
            P = measure_for_binomial_semivalue(alpha, n)
            game = random_game(rng, n)
            diff = binomial_semivalue(game, p) - prediction_value(ProbabilisticGame(game, P))
            worst = max(worst, float(np.max(np.abs(diff))))
    return CheckResult(
        "binomial semivalues equal PV under the matching product measure",
        worst < tol and worst_alpha < tol,
        f"max value dev {worst:.3g}, max alpha dev {worst_alpha:.3g}",
    )


def shapley_binomial_check():
    found = {n: binomial_parameter(SemivalueWeights.shapley(n)) for n in range(2, 11)}
    bad = [n for n in range(3, 11) if found[n] is not None]
    ok = not bad and found[2] is not None
    detail = "n=3..10: nothing"
    if bad:
        detail = f"unexpected alpha for n={bad}"
    detail += f"; n=2: alpha={found[2]}"
    return CheckResult("Shapley binomial test", ok, detail)


def null_player_contrast():
    """Correlated dictator: Shapley gives the null player 0, PV does not."""
    game = make_unanimity_game(2, 0b10)
    P = CoalitionMeasure(2, [0.5, 0.0, 0.0, 0.5])
    xi = prediction_value(ProbabilisticGame(game, P))
    phi = shapley(game)
    return CheckResult(
        "correlated dictator: null player has PV > 0, Shapley = 0",
        bool(xi[0] > 0 and phi[0] == 0),
        f"PV={xi[0]:.6g}, Shapley={phi[0]:.6g}",
    )


def run_suite(seed=0, trials=200, tol=1e-9):
    """Run every check. Returns a list of :class:`CheckResult`."""
    results = axiom_checks(trials, seed, tol)
    small = max(1, min(trials, 50))
    results.append(product_measure_agreement(trials, seed, tol))
    results.append(shapley_inducing_check(small, seed, tol))
    results.extend(probabilistic_value_checks(small, seed, tol))
    results.append(binomial_checks(seed, tol))
    results.append(shapley_binomial_check())
    results.append(null_player_contrast())
    return results
