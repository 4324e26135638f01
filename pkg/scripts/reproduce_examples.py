"""Run the shipped fixture models through the analysis pipeline and print
coverage verdicts, step counts, the reducibility matrix and the outcome of
every shipped relation.

    python scripts/reproduce_examples.py [--bound N] [--cap M]
"""

import itertools
from pathlib import Path

import click

from induction_models import Bound, closure_trace, decide_reducible, is_nim_bounded, verify_reduction
from induction_models.modelio import load_model, load_relation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

MODELS = ["first-principle", "strong-form", "backward-primes", "prime-induction", "base2-succ",
          "base2-plus2", "ex-equiv-third", "block-five"]

RELATIONS = [
    ("base2-plus2", "first-principle", "r-even"),
    ("first-principle", "base2-plus2", "r-half"),
    ("backward-primes", "block-five", "r-primes-blocks"),
    ("backward-primes", "block-five", "r-primes-blocks-literal"),
    ("block-five", "backward-primes", "r-blocks-primes"),
    ("ex-equiv-third", "first-principle", "r-third"),
    ("first-principle", "prime-induction", "r-omega"),
]


@click.command()
@click.option("--bound", "N", type=int, default=60, show_default=True)
@click.option("--cap", "M", type=int, default=140, show_default=True)
def main(N, M):
    bound = Bound(N, M)
    models = {name: load_model(FIXTURES / f"{name}.json") for name in MODELS}

    click.echo(f"bound N={bound.N} M={bound.M} cutoff={bound.cutoff}\n")
    click.echo(f"{'model':<18} {'steps':<14} {'covered':<8} missing")
    for name, m in models.items():
        v = is_nim_bounded(m, bound)
        missing = sorted(v.missing)
        shown = str(missing[:8]) + (" ..." if len(missing) > 8 else "")
        click.echo(f"{name:<18} {str(closure_trace(m, bound).stabilized_at):<14} "
                   f"{'yes' if v.covered else 'no':<8} {shown}")

    click.echo("\nreducibility (row reduces to column): y / n / ?")
    names = list(models)
    click.echo(" " * 18 + " ".join(f"{i:>2}" for i in range(len(names))))
    for i, a in enumerate(names):
        cells = []
        for b in names:
            ans = decide_reducible(models[a], models[b], bound).answer
            cells.append({"yes": " y", "no": " n", "unknown": " ?"}[ans])
        click.echo(f"{i:>2} {a:<15}" + " ".join(cells))

    click.echo("\nshipped relations")
    for m1, m2, rel in RELATIONS:
        r = verify_reduction(models[m1], models[m2], load_relation(FIXTURES / f"{rel}.json"), bound)
        flags = "".join("+" if ok else "-" for ok in (r.covers, r.base_to_base, r.step_consistent))
        extra = f" step counterexamples {list(r.step_counterexamples[:6])}" if not r.step_consistent else ""
        click.echo(f"  {rel:<26} {m1} -> {m2}: conditions {flags}{extra}")


if __name__ == "__main__":
    main()
