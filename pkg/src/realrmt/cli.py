"""Command line interface: exact tables, sampling, densities and comparison."""

import json
import math
import sys

import click
import numpy as np

from . import analytics, ensembles, kernels

SCHEMA = "#schema=real-rmt/v1"

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_COMPARE = 2
EXIT_NUMERIC = 3


def _fmt(x):
    return "%.15g" % (x,)


def _write_csv(out, header, rows):
    out.write(SCHEMA + "\n")
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) if isinstance(v, float) else str(v)
                           for v in row) + "\n")


def _write_json(out, config, rows, verdict=None):
    doc = {"config": config, "rows": rows}
    if verdict is not None:
        doc["verdict"] = verdict
    json.dump(doc, out, indent=2, sort_keys=True)
    out.write("\n")


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w"), True


def _validate(ensemble, n, tau, big_l):
    if ensemble not in ("goe", "ginibre", "partial", "spherical", "truncated"):
        raise click.UsageError("unknown ensemble %r" % (ensemble,))
    if n is None or n < 1:
        raise click.UsageError("matrix order --n must be a positive integer")
    if ensemble == "partial":
        if tau is None or not -1.0 < tau < 1.0:
            raise click.UsageError("partial ensemble requires --tau in (-1, 1)")
    if ensemble == "truncated":
        if big_l is None or big_l < 1:
            raise click.UsageError("truncated ensemble requires --l >= 1")


def _parse_grid(grid):
    try:
        lo, hi, bins = grid.split(":")
        lo, hi, bins = float(lo), float(hi), int(bins)
    except (ValueError, AttributeError):
        raise click.UsageError("--grid must have the form min:max:bins")
    if not (hi > lo and bins > 0):
        raise click.UsageError("--grid must have max > min and bins > 0")
    return lo, hi, bins


def _prob_rows(ensemble, n, tau, big_l, reps, seed, workers):
    probs = analytics.prob_table(ensemble, n, tau=tau, big_l=big_l)
    ks = [k for k in range(n + 1) if probs[k] != 0.0 or (n - k) % 2 == 0]
    rows = []
    hist = None
    if reps:
        hist = ensembles.simulate_real_counts(ensemble, n, reps, seed, tau=tau,
                                              big_l=big_l, workers=workers)
    for k in ks:
        row = {"k": k, "p_exact": float(probs[k])}
        if reps:
            p_hat = hist[k] / reps
            stderr = math.sqrt(max(p_hat * (1.0 - p_hat), 1e-300) / reps)
            row["p_hat"] = p_hat
            row["stderr"] = stderr
            row["z"] = (p_hat - probs[k]) / stderr if stderr > 0 else 0.0
        rows.append(row)
    return rows


common_options = [
    click.option("--ensemble", required=True,
                 type=click.Choice(["goe", "ginibre", "partial", "spherical",
                                    "truncated"])),
    click.option("--n", "--m", "n", type=int, required=True,
                 help="matrix order (for truncated: the truncation size M)"),
    click.option("--l", "big_l", type=int, default=None,
                 help="number of removed rows/columns (truncated)"),
    click.option("--tau", type=float, default=None,
                 help="symmetry parameter (partial)"),
    click.option("--seed", type=int, default=0),
    click.option("--out", default="-"),
    click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
                 default="csv"),
    click.option("--workers", type=int, default=1),
]


def _add_options(opts):
    def wrap(fn):
        for opt in reversed(opts):
            fn = opt(fn)
        return fn
    return wrap


@click.group()
def cli():
    """Exact and simulated real-eigenvalue statistics for real ensembles."""


@cli.command()
@_add_options(common_options)
@click.option("--reps", type=int, default=0)
def probs(ensemble, n, big_l, tau, seed, out, fmt, workers, reps):
    """Exact distribution of the number of real eigenvalues, optionally with MC."""
    _validate(ensemble, n, tau, big_l)
    rows = _prob_rows(ensemble, n, tau, big_l, reps, seed, workers)
    config = {"command": "probs", "ensemble": ensemble, "n": n, "l": big_l,
              "tau": tau, "reps": reps, "seed": seed}
    stream, close = _open_out(out)
    try:
        if fmt == "json":
            _write_json(stream, config, rows)
        else:
            header = ["k", "p_exact"] + (["p_hat", "stderr", "z"] if reps else [])
            _write_csv(stream, header, [[r[h] if h == "k" else float(r[h])
                                         for h in header] for r in rows])
    finally:
        if close:
            stream.close()


@cli.command()
@_add_options(common_options)
@click.option("--reps", type=int, default=1)
def sample(ensemble, n, big_l, tau, seed, out, fmt, workers, reps):
    """Draw matrices and emit their classified eigenvalues."""
    _validate(ensemble, n, tau, big_l)
    rows = []
    chunk = ensembles.CHUNK
    n_chunks = (reps + chunk - 1) // chunk
    for c in range(n_chunks):
        rng = ensembles.rng_for(seed, c)
        size = min(chunk, reps - c * chunk)
        for i in range(size):
            mat = ensembles.sample_matrix(ensemble, n, rng, tau=tau, big_l=big_l)
            eigs = np.linalg.eigvals(mat)
            reals, upper = ensembles.classify_spectrum(eigs)
            draw = c * chunk + i
            for lam in np.sort(reals):
                rows.append({"draw": draw, "species": "r", "re": float(lam),
                             "im": 0.0})
            for w in sorted(upper, key=lambda v: (v.real, v.imag)):
                rows.append({"draw": draw, "species": "c", "re": float(w.real),
                             "im": float(w.imag)})
    config = {"command": "sample", "ensemble": ensemble, "n": n, "l": big_l,
              "tau": tau, "reps": reps, "seed": seed}
    stream, close = _open_out(out)
    try:
        if fmt == "json":
            _write_json(stream, config, rows)
        else:
            header = ["draw", "species", "re", "im"]
            _write_csv(stream, header,
                       [[r["draw"], r["species"], r["re"], r["im"]] for r in rows])
    finally:
        if close:
            stream.close()


def _density_fn(ensemble, n, tau, big_l):
    if ensemble == "goe":
        return lambda x: float(kernels.goe_density(n, x))
    if ensemble == "ginibre":
        return lambda x: kernels.ginibre_density_real(n, x)
    if ensemble == "partial":
        return lambda x: kernels.partial_density_real(n, tau, x)
    if ensemble == "spherical":
        return lambda x: kernels.spherical_density_real(n)
    return lambda x: kernels.truncated_density_real(n, big_l, x)


@cli.command()
@_add_options(common_options)
@click.option("--grid", required=True, help="min:max:bins")
@click.option("--reps", type=int, default=0)
def density(ensemble, n, big_l, tau, seed, out, fmt, workers, grid, reps):
    """Analytic real-eigenvalue density on a grid, optionally with a histogram."""
    _validate(ensemble, n, tau, big_l)
    if ensemble in ("goe", "truncated") and n % 2 == 1:
        raise click.UsageError("density for this ensemble requires even order")
    lo, hi, bins = _parse_grid(grid)
    edges = np.linspace(lo, hi, bins + 1)
    centers = 0.5 * (edges[:-1] + edges[1:])
    width = (hi - lo) / bins
    fn = _density_fn(ensemble, n, tau, big_l)
    rho = [fn(float(x)) for x in centers]
    rows = []
    emp = stderr = None
    if reps:
        if ensemble == "spherical":
            vals = ensembles.simulate_real_eigenvalues(ensemble, n, reps, seed,
                                                       tau=tau, big_l=big_l,
                                                       workers=workers)
            vals = ensembles.boundary_angle(vals)
        else:
            vals = ensembles.simulate_real_eigenvalues(ensemble, n, reps, seed,
                                                       tau=tau, big_l=big_l,
                                                       workers=workers)
        hist, _ = np.histogram(vals, bins=edges)
        emp = hist / (reps * width)
        stderr = np.sqrt(np.maximum(hist, 1.0)) / (reps * width)
    for i, x in enumerate(centers):
        row = {"x": float(x), "rho": float(rho[i])}
        if reps:
            row["emp"] = float(emp[i])
            row["stderr"] = float(stderr[i])
        rows.append(row)
    config = {"command": "density", "ensemble": ensemble, "n": n, "l": big_l,
              "tau": tau, "reps": reps, "seed": seed, "grid": grid}
    stream, close = _open_out(out)
    try:
        if fmt == "json":
            _write_json(stream, config, rows)
        else:
            header = ["x", "rho"] + (["emp", "stderr"] if reps else [])
            _write_csv(stream, header, [[float(r[h]) for h in header]
                                        for r in rows])
    finally:
        if close:
            stream.close()


@cli.command()
@_add_options(common_options)
@click.option("--reps", type=int, default=10000)
@click.option("--z-max", type=float, default=4.0)
@click.option("--perturb-exact", type=float, default=0.0,
              help="testing aid: shift the exact values to force a mismatch")
def compare(ensemble, n, big_l, tau, seed, out, fmt, workers, reps, z_max,
            perturb_exact):
    """Compare exact probabilities against a Monte Carlo run; exit 2 on mismatch."""
    _validate(ensemble, n, tau, big_l)
    if reps < 1:
        raise click.UsageError("--reps must be positive for compare")
    rows = _prob_rows(ensemble, n, tau, big_l, reps, seed, workers)
    worst = 0.0
    for row in rows:
        row["p_exact"] = row["p_exact"] + perturb_exact
        if row["stderr"] > 0:
            row["z"] = (row["p_hat"] - row["p_exact"]) / row["stderr"]
        worst = max(worst, abs(row["z"]))
    verdict = "pass" if worst <= z_max else "fail"
    config = {"command": "compare", "ensemble": ensemble, "n": n, "l": big_l,
              "tau": tau, "reps": reps, "seed": seed, "z_max": z_max}
    stream, close = _open_out(out)
    try:
        if fmt == "json":
            _write_json(stream, config, rows, verdict=verdict)
        else:
            header = ["k", "p_exact", "p_hat", "stderr", "z"]
            _write_csv(stream, header, [[r[h] if h == "k" else float(r[h])
                                         for h in header] for r in rows])
            stream.write("#verdict=%s\n" % verdict)
    finally:
        if close:
            stream.close()
    if verdict == "fail":
        sys.exit(EXIT_COMPARE)


def main():
    try:
        cli.main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_CONFIG)
    except click.exceptions.Abort:
        sys.exit(EXIT_CONFIG)
    except SystemExit:
        raise
    except (ValueError, ArithmeticError, np.linalg.LinAlgError, RuntimeError) as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        sys.exit(EXIT_NUMERIC)


if __name__ == "__main__":
    main()
