"""Command-line sweeps emitting CSV.

Angles may be written as radians ("2.356") or multiples of pi ("0.75pi",
"pi/2", "3pi/4"). Exit status: 0 success, 1 identity check failed, 2 usage.
"""
from __future__ import annotations

import argparse
import csv
import re
import sys

import numpy as np

from .cavity import (
    CavityParams,
    MichelsonSetup,
    conditional_phase_eta,
    energy_basis,
)
from .discrimination import (
    DiscriminationProblem,
    brute_force_optimal_basis,
    distinguishability,
    erasing_basis,
    path_conditional_entropy,
    symmetric_basis,
)
from .games import PhaseGameConfig, average_E, play_phase_game, verify_erasure_identity
from .interferometer import InteractionParams, subensemble_visibility, visibility
from .qstate import bloch_axis_angle

_PI_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$")


def parse_angle(text: str) -> float:
    """'0.75pi', 'pi/2', '-pi', '3pi/4' or plain radians."""
    m = _PI_RE.match(text.lower())
    if m:
        coef = m.group(1)
        coef = 1.0 if coef in ("", "+") else -1.0 if coef == "-" else float(coef)
        den = float(m.group(2)) if m.group(2) else 1.0
        return coef * np.pi / den
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.12g}"


class _Output:
    def __init__(self, path):
        self.path = path

    def __enter__(self):
        self.fh = sys.stdout if self.path in (None, "-") else open(self.path, "w", newline="")
        self.writer = csv.writer(self.fh, lineterminator="\n")
        return self

    def header(self, cols):
        self.writer.writerow(cols)

    def row(self, values):
        self.writer.writerow([_fmt(v) for v in values])

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()
        else:
            self.fh.flush()


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _sweep(parser, args, default_start=0.0, default_stop=np.pi, default_points=33):
    start = default_start if args.start is None else args.start
    stop = default_stop if args.stop is None else args.stop
    points = default_points if args.points is None else args.points
    if points < 2:
        parser.error("--points must be at least 2")
    if not start < stop:
        parser.error("--start must be smaller than --stop")
    return np.linspace(start, stop, points)


def cmd_duality(parser, args) -> int:
    alphas = _sweep(parser, args)
    if alphas[0] < 0 or alphas[-1] > np.pi + 1e-12:
        parser.error("alpha sweep must stay inside [0, pi]")
    worst = 0.0
    with _Output(args.out) as out:
        out.header(["alpha", "V", "D", "D2_plus_V2", "H_path_given_Ms", "I_path_Ms"])
        for a in alphas:
            p = InteractionParams(a, args.beta, args.gamma)
            prob = DiscriminationProblem.canonical(p.alpha, p.beta)
            v, d = visibility(p), distinguishability(prob)
            h = path_conditional_entropy(prob)
            worst = max(worst, abs(d * d + v * v - 1))
            out.row([a, v, d, d * d + v * v, h, 1 - h])
    _log(f"duality: {len(alphas)} rows, max |D^2+V^2-1| = {worst:.3g}")
    return 0 if worst <= args.tolerance else 1


def cmd_figure3(parser, args) -> int:
    alphas = _sweep(parser, args)
    if alphas[0] < 0 or alphas[-1] > np.pi + 1e-12:
        parser.error("alpha sweep must stay inside [0, pi]")
    worst = 0.0
    with _Output(args.out) as out:
        out.header(["alpha", "phi0_tilde", "H_phase_given_D", "min_H_phase_given_D_Me",
                    "H_path_given_Ms", "chi_star", "identity_residual"])
        for a in alphas:
            chk = verify_erasure_identity(InteractionParams(a, args.beta, args.gamma), args.tolerance)
            residual = abs(chk.min_H_phi_given_D_Me - chk.H_path_given_Ms)
            worst = max(worst, residual, chk.residual)
            out.row([a, chk.phi0_tilde, chk.H_phi_given_D, chk.min_H_phi_given_D_Me,
                     chk.H_path_given_Ms, chk.chi_star, residual])
    _log(f"figure3: {len(alphas)} rows, max residual = {worst:.3g} (tolerance {args.tolerance:g})")
    return 0 if worst <= args.tolerance else 1


def cmd_average_e(parser, args) -> int:
    if args.panels < 64 or args.panels % 2:
        parser.error("--panels must be even and at least 64")
    p = InteractionParams(args.alpha, args.beta, args.gamma)
    if args.chi is not None:
        chis = [args.chi]
    else:
        n = 8 if args.points is None else args.points
        if n < 1:
            parser.error("--points must be positive")
        chis = np.arange(n) * (np.pi / n)
    values = []
    with _Output(args.out) as out:
        out.header(["alpha", "beta", "gamma", "chi", "E_bar", "E_bar_refined", "converged"])
        for chi in chis:
            res = average_E(p, chi, args.panels)
            values.append(res.value)
            out.row([p.alpha, p.beta, p.gamma, chi, res.value, res.refined, res.converged])
    spread = max(values) - min(values)
    _log(f"average-e: E_bar = {np.mean(values):.6f}, spread over chi = {spread:.3g}")
    return 0


def cmd_erase(parser, args) -> int:
    if args.alpha is None:
        parser.error("--alpha is required")
    p = InteractionParams(args.alpha, args.beta, args.gamma)
    chk = verify_erasure_identity(p, args.tolerance)
    phi0 = chk.phi0_tilde if args.phi0 is None else args.phi0
    chi = chk.chi_star if args.chi is None else args.chi
    game = play_phase_game(PhaseGameConfig(p, phi0, chi))
    with _Output(args.out) as out:
        out.header(["alpha", "beta", "gamma", "phi0_tilde", "chi_star", "phase_gain", "I_path_Ms",
                    "residual", "phi0", "chi", "E"])
        out.row([p.alpha, p.beta, p.gamma, chk.phi0_tilde, chk.chi_star, chk.phase_gain,
                 chk.path_information, chk.residual, phi0, chi, game.E])
    _log(f"erase: max_chi gain {chk.phase_gain:.9f} vs I(P:M_s) {chk.path_information:.9f} "
         f"-> {'PASS' if chk.passed else 'FAIL'}")
    return 0 if chk.passed else 1


def cmd_michelson(parser, args) -> int:
    cavity = [args.f0, args.f_uncoupled, args.f_coupled, args.kappa]
    have_cavity = any(v is not None for v in cavity)
    if (args.eta is None) == (not have_cavity):
        parser.error("give exactly one of --eta or the cavity set (--f0 --f-uncoupled --f-coupled --kappa)")
    if have_cavity:
        if any(v is None for v in cavity):
            parser.error("the cavity mode needs all of --f0 --f-uncoupled --f-coupled --kappa")
        cp = CavityParams(*cavity)
        raw = conditional_phase_eta(cp)
        setup = MichelsonSetup.from_cavity(cp)
        _log(f"michelson: cavity eta = {raw:.9f} rad, strong detuning = {cp.strong_detuning}")
    else:
        try:
            setup = MichelsonSetup(args.eta)
        except ValueError as exc:
            parser.error(str(exc))
    p = setup.params
    # follow phi0~ continuously into the flat-fringe point eta = pi
    chk = verify_erasure_identity(p, args.tolerance, tie_break="continuous")
    prob = DiscriminationProblem.canonical(p.alpha, p.beta)
    eraser = erasing_basis(prob, chk.chi_star)
    angle = bloch_axis_angle(eraser.basis, energy_basis())
    v_plus, v_minus = subensemble_visibility(p, eraser)
    with _Output(args.out) as out:
        out.header(["eta", "alpha", "beta", "gamma", "phi0_tilde", "chi_star", "energy_basis_angle",
                    "V", "V_plus", "V_minus", "I_path_Ms", "residual"])
        out.row([setup.eta, p.alpha, p.beta, p.gamma, chk.phi0_tilde, chk.chi_star, angle,
                 visibility(p), v_plus, v_minus, chk.path_information, chk.residual])
    _log(f"michelson: (alpha, beta, gamma) = ({p.alpha:.6f}, {p.beta:.6f}, {p.gamma:.6f}); "
         f"phi0~ = {chk.phi0_tilde:.6f}; eraser vs energy basis = {angle:.2e} rad; "
         f"residual = {chk.residual:.2e}")
    return 0 if chk.passed else 1


def cmd_qudit_demo(parser, args) -> int:
    if args.dim < 2:
        parser.error("--dim must be at least 2")
    n = 5 if args.points is None else args.points
    if n < 1:
        parser.error("--points must be positive")
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    with _Output(args.out) as out:
        out.header(["instance", "dim", "overlap", "H_symmetric", "H_bruteforce", "in_plane_probability",
                    "I_path_Ms", "phase_gain", "residual"])
        for k in range(n):
            z = rng.normal(size=(2, args.dim)) + 1j * rng.normal(size=(2, args.dim))
            phi1, phi2 = (v / np.linalg.norm(v) for v in z)
            prob = DiscriminationProblem(phi1, phi2)
            sym = symmetric_basis(prob)
            h_sym = path_conditional_entropy(prob, sym)
            _, h_bf = brute_force_optimal_basis(prob, n_samples=10_000, seed=args.seed + k)
            probs = np.abs(sym.matrix[:, :2].conj().T @ np.stack([phi1, phi2]).T) ** 2
            in_plane = float(probs.sum(axis=0).mean())
            chk = verify_erasure_identity(InteractionParams(0.0), args.tolerance, phi1, phi2)
            worst = max(worst, chk.residual)
            out.row([k, args.dim, abs(prob.overlap), h_sym, h_bf, in_plane, chk.path_information,
                     chk.phase_gain, chk.residual])
    _log(f"qudit-demo: {n} random d={args.dim} problems, max residual = {worst:.3g}")
    return 0 if worst <= args.tolerance else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qudit-eraser", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, tolerance=1e-6):
        sp.add_argument("--out", default=None, help="CSV path (default stdout)")
        sp.add_argument("--tolerance", type=float, default=tolerance)

    def interaction(sp, alpha=None):
        sp.add_argument("--alpha", type=parse_angle, default=alpha)
        sp.add_argument("--beta", type=parse_angle, default=1.5 * np.pi)
        sp.add_argument("--gamma", type=parse_angle, default=0.5 * np.pi)

    def sweep(sp):
        sp.add_argument("--start", type=parse_angle, default=None)
        sp.add_argument("--stop", type=parse_angle, default=None)
        sp.add_argument("--points", type=int, default=None)

    sp = sub.add_parser("duality", help="V, D and path entropies along an alpha sweep")
    sweep(sp)
    sp.add_argument("--beta", type=parse_angle, default=1.5 * np.pi)
    sp.add_argument("--gamma", type=parse_angle, default=0.0)
    common(sp, tolerance=1e-12)
    sp.set_defaults(func=cmd_duality, parser=sp)

    sp = sub.add_parser("figure3", help="phase/path entropies at phi0~ along an alpha sweep")
    sweep(sp)
    sp.add_argument("--beta", type=parse_angle, default=1.5 * np.pi)
    sp.add_argument("--gamma", type=parse_angle, default=0.5 * np.pi)
    common(sp)
    sp.set_defaults(func=cmd_figure3, parser=sp)

    sp = sub.add_parser("average-e", help="phi0-average of the erasure gain for one or more chi")
    interaction(sp, alpha=0.75 * np.pi)
    sp.add_argument("--chi", type=parse_angle, default=None)
    sp.add_argument("--points", type=int, default=None, help="number of chi values when --chi is absent")
    sp.add_argument("--panels", type=int, default=2048)
    common(sp)
    sp.set_defaults(func=cmd_average_e, parser=sp)

    sp = sub.add_parser("erase", help="check the erasure identity at one interaction")
    interaction(sp)
    sp.add_argument("--phi0", type=parse_angle, default=None)
    sp.add_argument("--chi", type=parse_angle, default=None)
    common(sp)
    sp.set_defaults(func=cmd_erase, parser=sp)

    sp = sub.add_parser("michelson", help="atom-cavity Michelson interferometer")
    sp.add_argument("--eta", type=parse_angle, default=None)
    sp.add_argument("--f0", type=float, default=None, help="photon frequency [Hz]")
    sp.add_argument("--f-uncoupled", type=float, default=None, help="bare cavity resonance [Hz]")
    sp.add_argument("--f-coupled", type=float, default=None, help="dressed-mode frequency [Hz]")
    sp.add_argument("--kappa", type=float, default=None, help="cavity decay rate [rad/s]")
    common(sp)
    sp.set_defaults(func=cmd_michelson, parser=sp)

    sp = sub.add_parser("qudit-demo", help="random d-level ancillas: plane property and identity")
    sp.add_argument("--dim", type=int, default=5)
    sp.add_argument("--points", type=int, default=None, help="number of random problems")
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_qudit_demo, parser=sp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args.parser, args)


if __name__ == "__main__":
    sys.exit(main())
