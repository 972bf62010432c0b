#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The ``qmlab`` command line. Every subcommand builds a report dict (written
as JSON) and a :class:`~qmlab.report.Table` (written as CSV).

Exit codes: 0 on success, 2 on usage errors and invalid inputs, 3 when an
analytic result disagrees with the Hilbert-space reference beyond
tolerance.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import argparse
import datetime
import io
import json
import sys

import numpy as np
import six
from six.moves import zip

from qmlab import __version__
from qmlab.bloch import (
    BallState,
    Decomposition,
    decompose,
    density_from_ball,
    direction_from_angles,
    direction_from_vector,
    make_ball_state,
    purity,
    recompose,
)
from qmlab.diagnostics import check_close, chsh_sigma, within_sigma
from qmlab.dynamics import (
    KINDS,
    NONLINEAR,
    UNITARY,
    EvolutionSpec,
    divergence_trajectory,
    time_grid,
)
from qmlab.hilbert import (
    joint_quantum_probability,
    partial_trace,
    pauli_generator,
    projector,
    ray_projector,
    schmidt_rank,
    singlet,
    spinor,
    tensor,
    trace_probability,
)
from qmlab.machines.compound import (
    ROD_RULES,
    ChshSetting,
    RodMachine,
    chsh,
    coplanar_direction,
    correlation,
    correlation_from_joint,
    marginals,
    max_cell_gap,
    max_chsh_over_grid,
    optimal_chsh_setting,
    product_joint_probability,
    run_chsh_trials,
    run_epr_trials,
    singlet_joint_probability,
    tv_distance,
)
from qmlab.machines.single import analytic_probability, run_trials
from qmlab.outcomes import OUTCOMES
from qmlab.report import SCHEMA, Table, write_report
from qmlab.utils import (
    EXACT_TOL,
    DegenerateDecomposition,
    InvariantViolation,
    merge_dicts,
)


__all__ = [
    'build_parser',
    'load_config',
    'cmd_machine',
    'cmd_singlet',
    'cmd_chsh',
    'cmd_paradox',
    'cmd_dynamics',
    'main',
]


EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3

# Unitary lifts agree up to accumulated rounding of the closed forms.
LIFT_TOL = 1e-9
TSIRELSON = 2. * np.sqrt(2.)


class UsageError(ValueError):
    pass


def _angle(args, value):
    if value is None:
        return None
    return np.deg2rad(value) if args.deg else float(value)


def _matrix(m):
    m = np.asarray(m)
    return {'real': m.real.tolist(), 'imag': m.imag.tolist()}


def _check_sampling(args):
    if args.samples < 0:
        raise UsageError('--samples must be non-negative, got {}.'.format(
            args.samples))
    if args.samples > 0 and args.seed is None:
        raise UsageError('--seed is required when --samples > 0.')
    if args.n_shards < 1:
        raise UsageError('--n-shards must be positive.')


def _direction_arg(args, pair, default):
    if pair is None:
        return default
    return direction_from_angles(_angle(args, pair[0]), _angle(args, pair[1]))


def cmd_machine(args):
    """
    One quantum machine: analytic probabilities, the trace-rule reference
    and, with ``--samples``, empirical frequencies.
    """
    _check_sampling(args)
    u = _direction_arg(args, args.u, direction_from_angles(0., 0.))
    if args.center:
        w = BallState([0., 0., 0.])
        d = decompose(w, axis=u)
    elif args.xyz is not None:
        w = make_ball_state(*args.xyz)
        d = decompose(w, axis=u if w.is_center() else None)
    elif args.theta is not None:
        d = Decomposition(
            direction_from_angles(_angle(args, args.theta),
                                  _angle(args, args.phi)), args.a)
        w = recompose(d)
    else:
        raise UsageError('machine needs --theta, --xyz or --center.')

    p_up, p_down = analytic_probability(w, u)
    W = density_from_ball(d)
    oracle = (trace_probability(W, projector(u)),
              trace_probability(W, projector(u.antipode())))
    gap = check_close('machine vs. trace rule', [p_up, p_down], oracle,
                      EXACT_TOL)
    report = {
        'state': w.w.tolist(),
        'direction': u.vector.tolist(),
        'analytic': {'p_up': p_up, 'p_down': p_down},
        'oracle': {'p_up': oracle[0], 'p_down': oracle[1]},
        'gap': gap,
        'empirical': None,
    }
    freqs = [''] * 2
    if args.samples > 0:
        emp = run_trials(w, u, args.samples, args.seed,
                         n_shards=args.n_shards, n_workers=args.n_workers,
                         verbose=args.verbose)
        report['empirical'] = emp.to_dict()
        report['within_4_sigma'] = within_sigma(
            [emp.freq_up, emp.freq_down], [p_up, p_down], args.samples)
        freqs = [emp.freq_up, emp.freq_down]
    table = Table(['outcome', 'analytic', 'oracle', 'empirical'],
                  [[o, p, q, f] for o, p, q, f in
                   zip(OUTCOMES, (p_up, p_down), oracle, freqs)])
    return report, table


def _singlet_row(alpha, j):
    return [alpha, j.p_uu, j.p_ud, j.p_du, j.p_dd, correlation_from_joint(j)]


def cmd_singlet(args):
    """
    The rod model in the singlet preparation against the singlet vector.
    """
    _check_sampling(args)
    if args.alpha is not None:
        u1 = coplanar_direction(0.)
        u2 = coplanar_direction(_angle(args, args.alpha))
    elif args.u1 is not None and args.u2 is not None:
        u1 = _direction_arg(args, args.u1, None)
        u2 = _direction_arg(args, args.u2, None)
    else:
        raise UsageError('singlet needs --alpha or both --u1 and --u2.')

    machine = RodMachine(u1, u2, first_break_prob=args.first_break_prob,
                         rod_rule=args.rod_rule)
    analytic = machine.joint()
    oracle = joint_quantum_probability(singlet(), u1, u2)
    gap = float(np.max(np.abs(analytic.as_array() - oracle.as_array())))
    if args.rod_rule == 'antipodal':
        check_close('rod model vs. singlet', analytic.as_array(),
                    oracle.as_array(), EXACT_TOL)
    alpha = u1.angle_to(u2)
    report = {
        'u1': u1.vector.tolist(),
        'u2': u2.vector.tolist(),
        'alpha': alpha,
        'rod_rule': args.rod_rule,
        'analytic': analytic.to_dict(),
        'oracle': oracle.to_dict(),
        'gap': gap,
        'correlation': correlation_from_joint(analytic),
        'marginals': list(marginals(analytic)),
        'empirical': None,
    }
    if args.samples > 0:
        emp = run_epr_trials(u1, u2, args.samples, args.seed,
                             n_shards=args.n_shards,
                             n_workers=args.n_workers, verbose=args.verbose,
                             first_break_prob=args.first_break_prob,
                             rod_rule=args.rod_rule)
        report['empirical'] = emp.to_dict()
        report['empirical_marginals'] = list(marginals(emp))
        report['within_4_sigma'] = within_sigma(
            emp.as_array(), analytic.as_array(), args.samples)

    rows = [_singlet_row(alpha, analytic)]
    if args.sweep is not None:
        if args.sweep < 1:
            raise UsageError('--sweep must be positive.')
        rows = []
        for a in np.linspace(0., np.pi, args.sweep + 1):
            j = RodMachine(coplanar_direction(0.), coplanar_direction(a),
                           first_break_prob=args.first_break_prob,
                           rod_rule=args.rod_rule).joint()
            rows.append(_singlet_row(float(a), j))
        report['sweep'] = Table(
            ['alpha', 'p_uu', 'p_ud', 'p_du', 'p_dd', 'E'], rows).to_dict()
    return report, Table(['alpha', 'p_uu', 'p_ud', 'p_du', 'p_dd', 'E'], rows)


_TERM_LABELS = ('E(a,b)', "E(a,b')", "E(a',b)", "E(a',b')")


def cmd_chsh(args):
    """CHSH value of a coplanar setting, analytic and sampled."""
    _check_sampling(args)
    if args.grid is not None:
        _, setting = max_chsh_over_grid(args.grid)
    elif args.optimal:
        setting = optimal_chsh_setting()
    elif args.angles is not None:
        setting = ChshSetting.from_angles(
            *[_angle(args, angle) for angle in args.angles])
    else:
        raise UsageError('chsh needs --angles, --optimal or --grid.')

    s_value = chsh(setting)
    if abs(s_value) > TSIRELSON + EXACT_TOL:
        raise InvariantViolation(
            '|S| = {} exceeds 2 sqrt(2).'.format(abs(s_value)))
    correlations = [correlation(u1, u2) for _, u1, u2 in setting.terms()]
    terms = []
    for label, (sign, _, _), e in zip(_TERM_LABELS, setting.terms(),
                                      correlations):
        terms.append({'term': label, 'sign': sign, 'E': e})
    report = {
        'directions': {
            'a': setting.a.vector.tolist(),
            'a_prime': setting.a_prime.vector.tolist(),
            'b': setting.b.vector.tolist(),
            'b_prime': setting.b_prime.vector.tolist(),
        },
        'S': s_value,
        'abs_S': abs(s_value),
        'violates_classical_bound': bool(abs(s_value) > 2.),
        'terms': terms,
        'empirical': None,
    }
    emp_e = [''] * 4
    if args.samples > 0:
        s_emp, joints = run_chsh_trials(setting, args.samples, args.seed,
                                        n_shards=args.n_shards,
                                        n_workers=args.n_workers,
                                        verbose=args.verbose)
        emp_e = [correlation_from_joint(j) for j in joints]
        report['empirical'] = {
            'S': s_emp,
            'abs_S': abs(s_emp),
            'sigma': chsh_sigma(correlations, args.samples),
            'joints': [j.to_dict() for j in joints],
            'E': emp_e,
        }
    table = Table(['term', 'sign', 'E', 'E_empirical'],
                  [[t['term'], t['sign'], t['E'], e]
                   for t, e in zip(terms, emp_e)])
    return report, table


def cmd_paradox(args):
    """
    The singlet against the product of its reduced states: same parts,
    different whole.

    `max_tv_distance` is half the L1 distance of the joints, 0.5 at
    ``alpha`` in {0, pi}. Each cell there differs by 0.25, the value
    reported as `max_cell_gap`.
    """
    if args.n_alpha < 2:
        raise UsageError('--n-alpha must be at least 2.')
    R = ray_projector(singlet())
    W1 = partial_trace(R, 1)
    W2 = partial_trace(R, 2)
    half = 0.5 * np.eye(2)
    check_close('reduced state 1', W1, half, EXACT_TOL)
    check_close('reduced state 2', W2, half, EXACT_TOL)
    product = tensor(W1, W2)

    center = BallState([0., 0., 0.])
    u1 = coplanar_direction(0.)
    rows = []
    for alpha in np.linspace(0., np.pi, args.n_alpha):
        u2 = coplanar_direction(alpha)
        js = singlet_joint_probability(u1, u2)
        jp = product_joint_probability(center, center, u1, u2)
        marginal_gap = check_close('marginals', marginals(js),
                                   marginals(jp), EXACT_TOL)
        rows.append([float(alpha), tv_distance(js, jp),
                     max_cell_gap(js, jp), marginal_gap])
    tvs = np.array([row[1] for row in rows])
    max_tv = float(np.max(tvs))
    argmax = [row[0] for row in rows if abs(row[1] - max_tv) <= EXACT_TOL]
    product_vector = np.kron(spinor(coplanar_direction(0.)),
                             spinor(coplanar_direction(np.pi)))
    report = {
        'reduced_state_1': _matrix(W1),
        'reduced_state_2': _matrix(W2),
        'product_density': _matrix(product),
        'purity_1': purity(W1),
        'purity_2': purity(W2),
        'schmidt_rank_singlet': schmidt_rank(singlet()),
        'schmidt_rank_product': schmidt_rank(product_vector),
        'max_tv_distance': max_tv,
        'argmax_alpha': argmax,
        'max_cell_gap': float(max(row[2] for row in rows)),
        'max_marginal_gap': float(max(row[3] for row in rows)),
    }
    table = Table(['alpha', 'tv_distance', 'max_cell_gap', 'marginal_gap'],
                  rows)
    return report, table


_AXES = {'x': (1., 0., 0.), 'y': (0., 1., 0.), 'z': (0., 0., 1.)}


def cmd_dynamics(args):
    """
    Mixture lift against pure lift of one decomposition under a unitary or
    nonlinear evolution.
    """
    if args.axis is not None:
        v = direction_from_vector(*_AXES[args.axis])
    elif args.axis_theta is not None:
        v = direction_from_angles(_angle(args, args.axis_theta),
                                  _angle(args, args.axis_phi))
    else:
        raise DegenerateDecomposition(
            'dynamics needs --axis or --axis-theta to fix the decomposition '
            'axis.')
    if args.n_steps < 1:
        raise UsageError('--n-steps must be positive.')
    d = Decomposition(v, args.a, args.b)
    generator = pauli_generator(args.generator, args.generator_offset)
    spec = EvolutionSpec(generator, kind=args.kind)
    trajectory = divergence_trajectory(
        d, spec, time_grid(args.t_max, args.n_steps),
        reweighted=args.reweighted_mixture)
    if args.kind == UNITARY:
        check_close('unitary lifts', trajectory.divergence,
                    np.zeros_like(trajectory.divergence), LIFT_TOL)
    header = ['t', 'mix_x', 'mix_y', 'mix_z', 'pure_x', 'pure_y', 'pure_z',
              'divergence']
    table = Table(header, trajectory.rows())
    report = {
        'kind': args.kind,
        'generator': _matrix(generator),
        'axis': v.vector.tolist(),
        'weights': [d.a, d.b],
        'reweighted_mixture': args.reweighted_mixture,
        'max_divergence': trajectory.max_divergence(),
        'argmax_t': trajectory.argmax_t(),
        'final_divergence': float(trajectory.divergence[-1]),
        'trajectory': table.to_dict(),
    }
    return report, table


def _add_common(parser):
    parser.add_argument('--samples', type=int, default=0,
                        help='Monte-Carlo trials; 0 for analytic only.')
    parser.add_argument('--seed', type=int, default=None,
                        help='Root seed, required with --samples.')
    parser.add_argument('--format', dest='output_format',
                        choices=['json', 'csv'], default='json')
    parser.add_argument('--output', dest='output_path', default=None,
                        help='Write the report here instead of stdout.')
    parser.add_argument('--reproducible', action='store_true',
                        help='Leave out the timestamp.')
    parser.add_argument('--config', action='append', default=[],
                        help='Flat JSON file of option defaults; may be '
                             'repeated, later files win.')
    parser.add_argument('--verbose', action='store_true',
                        help='Print shard progress to stderr.')
    parser.add_argument('--n-shards', type=int, default=1)
    parser.add_argument('--n-workers', type=int, default=None)
    parser.add_argument('--deg', action='store_true',
                        help='Read angles in degrees.')


def build_parser():
    """
    :return: The ``argparse.ArgumentParser`` of the ``qmlab`` command.
    """
    parser = argparse.ArgumentParser(
        prog='qmlab',
        description='Quantum machine experiments: single spins, the singlet '
                    'rod model, CHSH, reduced states and nonlinear '
                    'dynamics.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    parser.subcommands = subparsers.choices

    p = subparsers.add_parser('machine', help='One quantum machine.')
    _add_common(p)
    state = p.add_mutually_exclusive_group()
    state.add_argument('--theta', type=float, default=None)
    state.add_argument('--xyz', type=float, nargs=3, default=None,
                       metavar=('X', 'Y', 'Z'))
    state.add_argument('--center', action='store_true')
    p.add_argument('--phi', type=float, default=0.)
    p.add_argument('--a', type=float, default=1.,
                   help='Weight of the axis; the state is (2a - 1) v.')
    p.add_argument('--u', type=float, nargs=2, default=None,
                   metavar=('THETA', 'PHI'),
                   help='Measurement direction, default +z.')
    p.set_defaults(func=cmd_machine)

    p = subparsers.add_parser('singlet', help='Rod model of the singlet.')
    _add_common(p)
    p.add_argument('--alpha', type=float, default=None)
    p.add_argument('--u1', type=float, nargs=2, default=None,
                   metavar=('THETA', 'PHI'))
    p.add_argument('--u2', type=float, nargs=2, default=None,
                   metavar=('THETA', 'PHI'))
    p.add_argument('--rod-rule', choices=sorted(ROD_RULES),
                   default='antipodal')
    p.add_argument('--first-break-prob', type=float, default=0.5)
    p.add_argument('--sweep', type=int, default=None,
                   help='Tabulate N + 1 angles in [0, pi].')
    p.set_defaults(func=cmd_singlet)

    p = subparsers.add_parser('chsh', help='CHSH test.')
    _add_common(p)
    setting = p.add_mutually_exclusive_group()
    setting.add_argument('--angles', type=float, nargs=4, default=None,
                         metavar=('A', 'A_PRIME', 'B', 'B_PRIME'))
    setting.add_argument('--optimal', action='store_true')
    setting.add_argument('--grid', type=int, default=None,
                         help='Search a grid of N coplanar angles.')
    p.set_defaults(func=cmd_chsh)

    p = subparsers.add_parser(
        'paradox', help='Reduced states of the singlet.',
        description='Compare the singlet with the product of its reduced '
                    'states. max_tv_distance is half the L1 distance of the '
                    'joints (0.5 at alpha = 0 and pi); max_cell_gap is the '
                    'largest single-cell difference (0.25).')
    _add_common(p)
    p.add_argument('--n-alpha', type=int, default=37)
    p.set_defaults(func=cmd_paradox)

    p = subparsers.add_parser('dynamics', help='Mixture vs. pure lift.')
    _add_common(p)
    p.add_argument('--kind', choices=list(KINDS), default=NONLINEAR)
    p.add_argument('--generator', type=float, nargs=3, default=[0., 0., 1.],
                   metavar=('HX', 'HY', 'HZ'),
                   help='G = h0 I + h . sigma, default sigma_z.')
    p.add_argument('--generator-offset', type=float, default=0.)
    axis = p.add_mutually_exclusive_group()
    axis.add_argument('--axis', choices=sorted(_AXES), default=None)
    axis.add_argument('--axis-theta', type=float, default=None)
    p.add_argument('--axis-phi', type=float, default=0.)
    p.add_argument('--a', type=float, default=0.5)
    p.add_argument('--b', type=float, default=None)
    p.add_argument('--t-max', type=float, default=2.)
    p.add_argument('--n-steps', type=int, default=20)
    p.add_argument('--reweighted-mixture', action='store_true')
    p.set_defaults(func=cmd_dynamics)
    return parser


def load_config(path):
    """
    Read a flat JSON object of option defaults. Keys are option names with
    dashes or underscores.

    :return: A dict.
    """
    with io.open(path, encoding='utf-8') as f:
        config = json.load(f)
    if not isinstance(config, dict):
        raise UsageError('{} must hold a JSON object.'.format(path))
    for key, value in six.iteritems(config):
        if isinstance(value, (dict, list)) and key not in (
                'xyz', 'u', 'u1', 'u2', 'angles', 'generator'):
            raise UsageError('{}: option {!r} must be flat.'.format(path,
                                                                    key))
    return dict((key.replace('-', '_'), value)
                for key, value in six.iteritems(config))


def _parse(parser, argv):
    args = parser.parse_args(argv)
    if not args.config:
        return args
    defaults = merge_dicts(*[load_config(path) for path in args.config])
    sub = parser.subcommands[args.command]
    known = set(vars(args))
    unknown = sorted(set(defaults) - known)
    if unknown:
        raise UsageError('Unknown options in config: {}.'.format(
            ', '.join(unknown)))
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


def _effective_config(args):
    return dict((key, value) for key, value in six.iteritems(vars(args))
                if key != 'func')


def main(argv=None, stdout=None):
    """
    Run the ``qmlab`` command line.

    :param argv: The arguments, defaulting to ``sys.argv[1:]``.
    :param stdout: Where reports go when ``--output`` is not given.
    :return: The exit code.
    """
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = _parse(parser, argv)
    except SystemExit as e:
        return e.code
    except (ValueError, IOError) as e:
        print('qmlab: error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    try:
        body, table = args.func(args)
    except InvariantViolation as e:
        print('qmlab: invariant violated: {}'.format(e), file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, TypeError) as e:
        print('qmlab: error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    report = merge_dicts({
        'schema': SCHEMA,
        'command': args.command,
        'config': _effective_config(args),
    }, body)
    if not args.reproducible:
        report['timestamp'] = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
    try:
        write_report(report, table, args.output_format, args.output_path,
                     stream=stdout)
    except (ValueError, IOError) as e:
        print('qmlab: error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
