"""
Command Line Interface
======================

``chargebasis <command> [options]``. Every command prints or writes one
report; exit code 0 when all requested checks pass, 1 when a check fails
and 2 on malformed input.
"""

import json
import sys
import time
from typing import Any, Dict, List, Optional, Sequence

import click

from . import __version__
from .bases import (
    antisym_index_set,
    artin_basis,
    cc_shuffle_basis,
    charge_basis,
    descent_basis,
    hilbert_series_cocharge,
    qualifying_tableaux,
)
from .catabolism import (
    blasiak_insertion,
    build_seed_filling,
    chains_run,
    ctype_by_m_catabolism,
    ctype_direct,
    row_consistency_holds,
)
from .charge import charge_monomial, charge_statistic, charge_word, cocharge_statistic, cocharge_word, tableau_charge
from .combinatorics import QPolynomial, enumerate_syt, make_composition, make_partition, make_tableau, shape, transpose
from .combinatorics.tableaux import reading_word, require_standard, tableau_to_json
from .core import ChargeBasisFramework
from .permutations import make_permutation, rsk
from .symmetric import e_coeff_combinatorial, e_coeff_symmetric, modified_hl, modified_hl_by_qkostka, to_basis
from .utils import ChargeBasisError, parse_decomposition, parse_int_list, parse_word

COMMANDS = (
    "rsk", "cocharge", "charge", "charge-monomial", "ctype", "blasiak", "chains",
    "basis", "hilbert", "hl", "antisym", "verify", "check-theorems",
)


class InputError(click.ClickException):
    """Malformed command-line input."""
    exit_code = 2


def _parsed(parser, text: Optional[str], what: str):
    if text is None:
        return None
    try:
        return parser(text)
    except ChargeBasisError as e:
        raise InputError(f"invalid {what}: {e}")


def _partition(text: Optional[str]):
    return _parsed(lambda t: make_partition(parse_int_list(t)), text, "partition")


def _composition(text: Optional[str]):
    return _parsed(lambda t: make_composition(parse_int_list(t)), text, "composition")


def _permutation(text: str):
    return _parsed(lambda t: make_permutation(parse_word(t)), text, "permutation")


def _word(text: str):
    return _parsed(parse_word, text, "word")


def _tableau(text: str):
    def parse(t):
        try:
            rows = json.loads(t)
        except json.JSONDecodeError as e:
            raise ChargeBasisError(f"not valid JSON: {e}")
        tableau = make_tableau(rows)
        require_standard(tableau)
        return tableau
    return _parsed(parse, text, "tableau")


def output_options(func):
    func = click.option("--deterministic", is_flag=True, help="Omit wall-clock timings")(func)
    func = click.option("--output", "output_path", type=click.Path(dir_okay=False), help="Write the report here")(func)
    func = click.option("--format", "output_format", type=click.Choice(["json", "csv"]), default="json")(func)
    return func


def _framework(ctx: click.Context, **overrides: Any) -> ChargeBasisFramework:
    options = ctx.find_root().obj
    overrides["deterministic"] = overrides.get("deterministic") or None
    return ChargeBasisFramework(options["config"], options["env"], **overrides)


def _emit(
    framework: ChargeBasisFramework,
    command: str,
    result: Dict[str, Any],
    passed: Optional[bool] = None,
    rows: Optional[List[Dict[str, Any]]] = None,
    timings: Optional[Dict[str, float]] = None,
) -> int:
    run_config = framework.run_config
    report = framework.reports.build(command, run_config, result, passed, timings)
    if run_config.output_path:
        framework.reports.write(report, run_config.output_path, run_config.output_format, rows)
    elif run_config.output_format == "csv" and rows is not None:
        click.echo(framework.reports.render_csv(rows), nl=False)
    else:
        click.echo(framework.reports.render_json(report), nl=False)
    return 1 if passed is False else 0


class _Timer:
    def __init__(self):
        self.timings: Dict[str, float] = {}

    def __call__(self, name: str, func, *args, **kwargs):
        started = time.perf_counter()
        value = func(*args, **kwargs)
        self.timings[name] = time.perf_counter() - started
        return value


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "config_path", default="config/", show_default=True, help="Configuration directory")
@click.option("--env", "environment", type=click.Choice(["dev", "prod"]), default="dev", show_default=True)
@click.version_option(version=__version__, prog_name="chargebasis")
@click.pass_context
def cli(ctx: click.Context, config_path: str, environment: str):
    """Charge monomial bases of Garsia-Procesi rings."""
    ctx.obj = {"config": config_path, "env": environment}


@cli.command("rsk")
@click.option("--w", "w", required=True, help="Permutation, e.g. 3516247")
@output_options
@click.pass_context
def rsk_command(ctx, w, **options):
    """Insertion and recording tableaux of a permutation."""
    w = _permutation(w)
    framework = _framework(ctx, **options)
    p, q = rsk(w)
    return _emit(framework, "rsk", {"w": w, "P": tableau_to_json(p), "Q": tableau_to_json(q), "shape": shape(p)})


@cli.command("cocharge")
@click.option("--w", "w", required=True)
@output_options
@click.pass_context
def cocharge_command(ctx, w, **options):
    """Cocharge word and cocharge of a permutation."""
    w = _permutation(w)
    framework = _framework(ctx, **options)
    return _emit(framework, "cocharge", {"w": w, "cocharge_word": cocharge_word(w), "cocharge": cocharge_statistic(w)})


@cli.command("charge")
@click.option("--w", "w", required=True)
@output_options
@click.pass_context
def charge_command(ctx, w, **options):
    """Charge word and charge of a permutation."""
    w = _permutation(w)
    framework = _framework(ctx, **options)
    return _emit(framework, "charge", {"w": w, "charge_word": charge_word(w), "charge": charge_statistic(w)})


@cli.command("charge-monomial")
@click.option("--w", "w", required=True)
@output_options
@click.pass_context
def charge_monomial_command(ctx, w, **options):
    """The monomial x^cw(w)."""
    w = _permutation(w)
    framework = _framework(ctx, **options)
    exponents, rendered = charge_monomial(w)
    return _emit(framework, "charge-monomial",
                 {"w": w, "exponents": exponents, "monomial": rendered, "degree": sum(exponents)})


@cli.command("ctype")
@click.option("--tableau", "tableau", help='Standard tableau as JSON rows, bottom row first, e.g. "[[1,3],[2]]"')
@click.option("--w", "w", help="Use the insertion tableau of this permutation")
@output_options
@click.pass_context
def ctype_command(ctx, tableau, w, **options):
    """Catabolizability type by the direct, m-catabolism and insertion routes."""
    if (tableau is None) == (w is None):
        raise InputError("give exactly one of --tableau and --w")
    t = _tableau(tableau) if tableau is not None else rsk(_permutation(w))[0]
    framework = _framework(ctx, **options)
    timer = _Timer()
    direct = timer("direct", ctype_direct, t)
    by_m = timer("m_catabolism", ctype_by_m_catabolism, t)
    insertion = timer("blasiak", blasiak_insertion, cocharge_word(reading_word(t)))
    agree = direct == by_m == insertion.shape
    result = {
        "tableau": tableau_to_json(t),
        "direct": direct,
        "m_catabolism": by_m,
        "blasiak": insertion.shape,
        "agree": agree,
    }
    return _emit(framework, "ctype", result, passed=agree, timings=timer.timings)


@cli.command("blasiak")
@click.option("--word", "word", required=True, help="Cocharge word, e.g. 211001")
@output_options
@click.pass_context
def blasiak_command(ctx, word, **options):
    """Catabolism insertion of a cocharge word."""
    word = _word(word)
    framework = _framework(ctx, **options)
    result = blasiak_insertion(word)
    return _emit(framework, "blasiak", {
        "word": word,
        "shape": result.shape,
        "filling": tableau_to_json(result.filling),
        "pair_filling": tableau_to_json(result.pair_filling()),
        "reads": result.reads,
        "steps": result.steps,
        "row_consistency": row_consistency_holds(result),
    })


@cli.command("chains")
@click.option("--word", "word", required=True, help="Cocharge word z")
@click.option("--decomposition", required=True, help='JSON list of 1-based position blocks, e.g. "[[1,2],[3]]"')
@click.option("--validate/--no-validate", default=True, show_default=True, help="Check the six state conditions")
@output_options
@click.pass_context
def chains_command(ctx, word, decomposition, validate, **options):
    """Chains insertion from the summed filling of a decomposition of z."""
    word = _word(word)
    blocks = _parsed(parse_decomposition, decomposition, "decomposition")
    framework = _framework(ctx, **options)
    timer = _Timer()
    seed = build_seed_filling(word, blocks)
    run = timer("chains", chains_run, word, seed, validate)
    target = timer("blasiak", blasiak_insertion, word).shape
    result = {
        "word": word,
        "decomposition": blocks,
        "seed": tableau_to_json(seed),
        "shape": run.shape,
        "filling": tableau_to_json(run.filling),
        "trace": [step.to_dict() for step in run.trace],
        "dominance_chain": run.is_dominance_chain(),
        "ctype": target,
    }
    passed = run.is_dominance_chain() and run.shape == target
    return _emit(framework, "chains", result, passed=passed, timings=timer.timings)


@cli.command("basis")
@click.option("--mu", help="Partition, e.g. 3,1")
@click.option("--n", "n", type=int, help="Number of variables for artin and descent")
@click.option("--kind", type=click.Choice(["charge", "shuffle", "descent", "artin"]), default="charge", show_default=True)
@output_options
@click.pass_context
def basis_command(ctx, mu, n, kind, **options):
    """Monomial sets C_mu, D_mu, the descent basis or the Artin basis."""
    mu = _partition(mu)
    if kind in ("charge", "shuffle") and mu is None:
        raise InputError(f"--kind {kind} needs --mu")
    if kind in ("descent", "artin"):
        n = n if n is not None else (sum(mu) if mu else None)
        if n is None:
            raise InputError(f"--kind {kind} needs --n or --mu")
    framework = _framework(ctx, mu=mu, n=n if n is not None else sum(mu), **options)
    timer = _Timer()
    if kind == "charge":
        basis = timer("basis", charge_basis, mu, framework.run_config.workers)
    elif kind == "shuffle":
        basis = timer("basis", cc_shuffle_basis, mu)
    elif kind == "descent":
        basis = timer("basis", descent_basis, n)
    else:
        basis = timer("basis", artin_basis, n)
    payload = basis.to_dict()
    payload.update({"kind": kind, "mu": mu})
    return _emit(framework, "basis", payload, rows=payload["monomials"], timings=timer.timings)


@cli.command("hilbert")
@click.option("--mu", required=True)
@output_options
@click.pass_context
def hilbert_command(ctx, mu, **options):
    """Hilbert series of C_mu by three routes."""
    mu = _partition(mu)
    framework = _framework(ctx, mu=mu, n=sum(mu), **options)
    timer = _Timer()
    series = timer("basis", charge_basis, mu, framework.run_config.workers).hilbert_series()
    by_tableaux = QPolynomial()
    for s in qualifying_tableaux(mu):
        by_tableaux = by_tableaux + QPolynomial.monomial(tableau_charge(s), len(enumerate_syt(shape(s))))
    by_cocharge = timer("cocharge", hilbert_series_cocharge, transpose(mu))
    agree = series == by_tableaux == by_cocharge
    result = {
        "mu": mu,
        "series": series.to_list(),
        "text": str(series),
        "by_tableaux": by_tableaux.to_list(),
        "by_cocharge": by_cocharge.to_list(),
        "agree": agree,
    }
    rows = [{"degree": d, "count": c} for d, c in enumerate(series.to_list())]
    return _emit(framework, "hilbert", result, passed=agree, rows=rows, timings=timer.timings)


@cli.command("hl")
@click.option("--mu", required=True)
@click.option("--basis", "basis", type=click.Choice(["s", "m", "e", "h"]), default="s", show_default=True)
@output_options
@click.pass_context
def hl_command(ctx, mu, basis, **options):
    """Modified Hall-Littlewood function H~_mu[X;q]."""
    mu = _partition(mu)
    framework = _framework(ctx, mu=mu, n=sum(mu), **options)
    timer = _Timer()
    by_ctype = timer("catabolizability", modified_hl, mu)
    by_qkostka = timer("qkostka", modified_hl_by_qkostka, mu)
    expansion = to_basis(by_ctype, basis).to_dict()
    agree = by_ctype == by_qkostka
    rows = [{"partition": key, "coefficients": value} for key, value in expansion["coefficients"].items()]
    return _emit(framework, "hl", {"mu": mu, "expansion": expansion, "routes_agree": agree},
                 passed=agree, rows=rows, timings=timer.timings)


@cli.command("antisym")
@click.option("--mu", required=True)
@click.option("--gamma", required=True, help="Composition, e.g. 2,2")
@output_options
@click.pass_context
def antisym_command(ctx, mu, gamma, **options):
    """Antisymmetric index set of (mu, gamma) and its graded count."""
    mu, gamma = _partition(mu), _composition(gamma)
    framework = _framework(ctx, mu=mu, gamma=gamma, n=sum(mu), **options)
    timer = _Timer()
    index_set = timer("index_set", antisym_index_set, mu, gamma)
    combinatorial = e_coeff_combinatorial(mu, gamma)
    symmetric = timer("symmetric", e_coeff_symmetric, mu, gamma)
    payload = index_set.to_dict()
    payload.update({"e_coefficient": combinatorial.to_list(), "symmetric": symmetric.to_list()})
    agree = combinatorial == symmetric
    return _emit(framework, "antisym", payload, passed=agree,
                 rows=[entry.to_dict() for entry in index_set.entries], timings=timer.timings)


@cli.command("verify")
@click.option("--mu", required=True, help="Ring index: certify C_{mu^t} inside R_mu")
@click.option("--gamma", help="Certify the antisymmetrized basis of N_gamma R_mu instead")
@click.option("--order", type=click.Choice(["grevlex", "lex"]), default="grevlex", show_default=True)
@click.option("--groebner-n6", is_flag=True, help="Allow the Gröbner path at n = 6")
@output_options
@click.pass_context
def verify_command(ctx, mu, gamma, order, groebner_n6, **options):
    """Gröbner certification inside the Garsia-Procesi ring R_mu."""
    ring_index, gamma = _partition(mu), _composition(gamma)
    if gamma is not None and sum(gamma) != sum(ring_index):
        raise InputError(f"|{gamma}| differs from |{ring_index}|")
    framework = _framework(ctx, mu=ring_index, gamma=gamma, n=sum(ring_index), order=order,
                           groebner_n6=groebner_n6 or None, **options)
    if gamma is None:
        certification = framework.verifier.verify_ring(ring_index)
    else:
        certification = framework.verifier.verify_antisym(ring_index, gamma)
    deterministic = framework.run_config.deterministic
    payload = certification.to_dict(include_timings=False)
    return _emit(framework, "verify", payload, passed=certification.passed, rows=[payload],
                 timings=None if deterministic else certification.timings)


@cli.command("check-theorems")
@click.option("--suite", required=True, help="Suite name or 'all'")
@click.option("--n", "n", type=int, help="Size bound; the configured default when omitted")
@click.option("--seed", type=int, help="Seed recorded for sampled suites")
@click.option("--groebner-n6", is_flag=True, help="Allow the Gröbner path at n = 6")
@output_options
@click.pass_context
def check_theorems_command(ctx, suite, n, seed, groebner_n6, **options):
    """Run theorem verification suites."""
    framework = _framework(ctx, suite=suite, n=n, seed=seed, groebner_n6=groebner_n6 or None, **options)
    results = framework.suites.run_many(suite, n)
    include_timings = not framework.run_config.deterministic
    summaries = [r.to_dict(include_timings) for r in results]
    passed = all(r.passed for r in results)
    rows = [
        {"suite": r.name, "n": r.n, "pass": r.passed, "checked": r.checked, "failures": r.failure_count}
        for r in results
    ]
    timings = {r.name: r.seconds for r in results}
    return _emit(framework, "check-theorems", {"suites": summaries}, passed=passed, rows=rows, timings=timings)


def run_command(argv: Sequence[str]) -> int:
    """Run one command line; returns the process exit code."""
    try:
        rv = cli.main(args=list(argv), prog_name="chargebasis", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except ChargeBasisError as e:
        click.echo(f"Error: {type(e).__name__}: {e}", err=True)
        return 2
    return rv if isinstance(rv, int) else 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
