import argparse
import json
import logging
import sys
from typing import List, Optional

import pandas as pd

from .distributed_router import DistributedRouter
from .errors import CapacityError, GenerationError, PreconditionError, UnsupportedOperationError, ValidationError
from .experiment import (EVAL_COLUMNS, ONLINE_COLUMNS, RATIO_COLUMNS, ExperimentSpec, eval_row, online_row,
                         ratio_row, run_sweep, summarize)
from .generators import gen_line_voronoi, gen_local_adversarial, gen_random, gen_random_online, gen_simplex
from .instance import InstanceFamily, InstanceFamilyParams, OfflineInstance, OnlineInstance, validate_instance
from .instance_file import load_instance, save_instance
from .partitions import LAMBDA, PartitionKind
from .serializers import InstanceSerializer
from .tsp import EXACT_CAP, Oracle
from ._services.base_service import ENUMERATION_BUDGET, Limits

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAPACITY = 3


def _add_limits(parser: argparse.ArgumentParser):
    parser.add_argument('--exact-cap', type=int, default=EXACT_CAP,
                        help='Maximum number of requests of an exact tour (default: %(default)s).')
    parser.add_argument('--budget', type=int, default=ENUMERATION_BUDGET,
                        help='Maximum number m^n of assignments the optimum may enumerate (default: %(default)s).')
    parser.add_argument('--workers', type=int, default=1,
                        help='Worker processes (default: %(default)s).')


def _add_scheme(parser: argparse.ArgumentParser):
    parser.add_argument('--scheme', choices=PartitionKind.ALL, default=PartitionKind.VORONOI,
                        help='Partition scheme (default: %(default)s).')
    parser.add_argument('--lambda', dest='lambda_', type=float, default=LAMBDA,
                        help='Level partition constant in (1/2, 1) (default: %(default)s).')


def _add_output(parser: argparse.ArgumentParser):
    parser.add_argument('--out', help='Output path. Default: standard output.')
    parser.add_argument('--no-timing', dest='timing', action='store_false',
                        help='Leave the runtime_ms column empty so that output is identical across runs.')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='depart',
                                     description='Static partition schemes for distributed multi-depot routing.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress (-v) or everything (-vv) to standard error.')
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', help='Generate an instance file.')
    gen.add_argument('family', choices=InstanceFamily.ALL)
    gen.add_argument('--m', type=int, help='Number of servers.')
    gen.add_argument('--n', type=int, help='Number of requests (random families).')
    gen.add_argument('--k', type=float, help='Request offset (line_voronoi).')
    gen.add_argument('--eps', type=float, help='Request scale (simplex).')
    gen.add_argument('--f', type=float, help='Depot distance ratio bound.')
    gen.add_argument('--seed', type=int, default=0, help='Seed of the random families (default: %(default)s).')
    gen.add_argument('--online', action='store_true', help='Add sorted uniform release dates (random families).')
    gen.add_argument('--max-release', type=float, default=10.0,
                     help='Largest release date of --online instances (default: %(default)s).')
    gen.add_argument('--out', help='Instance path. Default: standard output.')

    evaluate = commands.add_parser('eval', help='Partition cost DIS of an instance.')
    evaluate.add_argument('instance')
    _add_scheme(evaluate)
    evaluate.add_argument('--oracle', choices=Oracle.ALL, default=Oracle.EXACT,
                          help='Tour oracle (default: %(default)s).')
    _add_limits(evaluate)
    _add_output(evaluate)

    ratio = commands.add_parser('ratio', help='DIS, OPT and DIS/OPT of an instance.')
    ratio.add_argument('instance')
    _add_scheme(ratio)
    _add_limits(ratio)
    _add_output(ratio)

    sweep = commands.add_parser('sweep', help='Ratios over seeded random instances, summarized per group.')
    sweep.add_argument('--family', choices=InstanceFamily.RANDOM, default=InstanceFamily.RANDOM_LINE)
    _add_scheme(sweep)
    sweep.add_argument('--oracle', choices=Oracle.ALL, default=Oracle.EXACT,
                       help='Tour oracle of the partition cost (default: %(default)s).')
    sweep.add_argument('--m', type=int, nargs='+', default=[2, 3, 4], help='Numbers of servers.')
    sweep.add_argument('--n', type=int, nargs='+', default=[5], help='Numbers of requests.')
    sweep.add_argument('--f', type=float, nargs='+', default=[], help='Depot distance ratio bounds.')
    sweep.add_argument('--seed', type=int, default=0, help='First seed (default: %(default)s).')
    sweep.add_argument('--seeds', type=int, default=50, help='Number of seeds (default: %(default)s).')
    sweep.add_argument('--online', action='store_true', help='Check the online reduction instead of ratios.')
    sweep.add_argument('--max-release', type=float, default=10.0,
                       help='Largest release date of --online instances (default: %(default)s).')
    sweep.add_argument('--rows', help='Also write every instance row to this path.')
    _add_limits(sweep)
    _add_output(sweep)

    online = commands.add_parser('online', help='Distributed online algorithm on a release-dated instance.')
    online.add_argument('instance')
    _add_scheme(online)
    _add_limits(online)
    _add_output(online)

    validate = commands.add_parser('validate', help='Check an instance file.')
    validate.add_argument('instance')

    return parser


def _limits(args) -> Limits:
    return Limits(exact_cap=args.exact_cap, enumeration_budget=args.budget, workers=args.workers)


def _write_table(table: pd.DataFrame, out: Optional[str]):
    table.to_csv(out if out else sys.stdout, index=False)


def _load_offline(path: str) -> OfflineInstance:
    instance = load_instance(path)
    return instance.locations() if isinstance(instance, OnlineInstance) else instance


def cmd_gen(args) -> int:
    if args.family in InstanceFamily.RANDOM:
        params = InstanceFamilyParams(args.family, m=args.m, n=args.n, f=args.f, seed=args.seed)
        instance = gen_random_online(params, args.max_release) if args.online else gen_random(params)
    elif args.family == InstanceFamily.LINE_VORONOI:
        InstanceFamilyParams(args.family, m=args.m, k=args.k).require('m', 'k')
        instance = gen_line_voronoi(args.m, args.k)
    elif args.family == InstanceFamily.SIMPLEX:
        InstanceFamilyParams(args.family, m=args.m, eps=args.eps).require('m', 'eps')
        instance = gen_simplex(args.m, args.eps)
    else:
        InstanceFamilyParams(args.family, f=args.f).require('f')
        instance = gen_local_adversarial(args.f)

    problems = validate_instance(instance)
    if problems:
        raise ValidationError('Generated instance is invalid: {}'.format('; '.join(problems)))
    if args.out:
        save_instance(instance, args.out)
    else:
        json.dump(InstanceSerializer.to_json(instance), sys.stdout, indent=2)
        sys.stdout.write('\n')
    return EXIT_OK


def cmd_eval(args) -> int:
    router = DistributedRouter(_limits(args))
    row = eval_row(router, args.scheme, _load_offline(args.instance), lambda_=args.lambda_, oracle=args.oracle,
                   timing=args.timing)
    _write_table(pd.DataFrame([row], columns=EVAL_COLUMNS), args.out)
    return EXIT_OK


def cmd_ratio(args) -> int:
    router = DistributedRouter(_limits(args))
    row = ratio_row(router, args.scheme, _load_offline(args.instance), lambda_=args.lambda_, timing=args.timing)
    _write_table(pd.DataFrame([row], columns=RATIO_COLUMNS), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = ExperimentSpec(
        args.family,
        args.scheme,
        m_values=args.m,
        n_values=args.n,
        f_values=args.f,
        seeds=range(args.seed, args.seed + args.seeds),
        oracle=args.oracle,
        lambda_=args.lambda_,
        limits=_limits(args),
        online=args.online,
        max_release=args.max_release,
        timing=args.timing
    )
    rows = run_sweep(spec)
    if args.rows:
        rows.to_csv(args.rows, index=False)
    _write_table(summarize(rows, online=args.online), args.out)
    return EXIT_OK


def cmd_online(args) -> int:
    instance = load_instance(args.instance)
    if not isinstance(instance, OnlineInstance):
        raise ValidationError('{} has no release dates.'.format(args.instance))
    router = DistributedRouter(_limits(args))
    row = online_row(router, args.scheme, instance, lambda_=args.lambda_, timing=args.timing)
    _write_table(pd.DataFrame([row], columns=ONLINE_COLUMNS), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    instance = load_instance(args.instance)
    problems = validate_instance(instance)
    for problem in problems:
        print('{}: {}'.format(args.instance, problem), file=sys.stderr)
    if problems:
        return EXIT_VALIDATION
    print('{}: ok ({})'.format(args.instance, instance))
    return EXIT_OK


COMMANDS = {
    'gen': cmd_gen,
    'eval': cmd_eval,
    'ratio': cmd_ratio,
    'sweep': cmd_sweep,
    'online': cmd_online,
    'validate': cmd_validate,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    try:
        return COMMANDS[args.command](args)
    except (CapacityError, GenerationError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_CAPACITY
    except (ValidationError, PreconditionError, UnsupportedOperationError, ValueError, OSError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == '__main__':
    sys.exit(main())
