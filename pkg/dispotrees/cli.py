"""
    dispotrees.cli
    ~~~~~~~~~~~~~~

    Command line interface: enumeration, conversion, statistics,
    sampling and verification, reading and writing one object per line.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import argparse
import json
import logging
import sys

from . import CoefficientOverflowError, DispotreesError, VERSION, constants
from .bijections import marks_from_disposition, phi, phi_inverse, \
    prufer_marks, sample_trees
from .dispositions import RNG_ALGORITHM, enumerate_dispositions, \
    parse_disposition, sample_dispositions
from .permutations import colored_to_disposition, disposition_to_colored, \
    parse_colored
from .plane_trees import enumerate_plane_trees, parse_tree
from .verifier import DEFAULT_CAPS, parse_caps, verify_all

LOGGER = logging.getLogger(__name__)

MAPS = {
    'tree-to-disposition': (parse_tree, phi),
    'disposition-to-tree': (parse_disposition, phi_inverse),
    'disposition-to-perm': (parse_disposition, disposition_to_colored),
}
MAP_PERM_TO_DISPOSITION = 'perm-to-disposition'

INPUT_TREE = 'tree'
INPUT_DISPOSITION = 'disposition'
PARSERS = {INPUT_TREE: parse_tree, INPUT_DISPOSITION: parse_disposition}


def _write(args, obj, extra=None):
    if args.format == constants.FORMAT_JSON:
        data = obj.to_json() if hasattr(obj, 'to_json') else obj
        if extra:
            data = dict(data, **extra)
        line = json.dumps(data)
    else:
        line = obj.to_text() if hasattr(obj, 'to_text') else str(obj)
    args.outfile.write(line + '\n')


def _lines(args):
    for line in args.infile:
        line = line.strip()
        if line:
            yield line


def cmd_trees(args):
    for tree in enumerate_plane_trees(args.n, args.root):
        _write(args, tree)


def cmd_dispositions(args):
    for d in enumerate_dispositions(args.m, args.n):
        _write(args, d)


def cmd_map(args):
    if args.direction == MAP_PERM_TO_DISPOSITION:
        for line in _lines(args):
            p = parse_colored(line, args.n)
            _write(args, colored_to_disposition(p, args.n))
        return
    parse, convert = MAPS[args.direction]
    for line in _lines(args):
        _write(args, convert(parse(line)))


def cmd_marks(args):
    parse = PARSERS[args.input]
    for line in _lines(args):
        obj = parse(line)
        if args.input == INPUT_TREE:
            _write(args, prufer_marks(obj))
        else:
            _write(args, marks_from_disposition(obj))


def _stats_text(stats):
    return ' '.join(
        '%s=%s' % (name, ','.join(str(item) for item in value)
                   if isinstance(value, tuple) else value)
        for name, value in stats._asdict().items())


def cmd_stats(args):
    for line in _lines(args):
        obj = PARSERS[args.kind](line)
        stats = obj.stats()
        if args.format == constants.FORMAT_JSON:
            data = obj.to_json()
            data['stats'] = dict(
                (name, list(value) if isinstance(value, tuple) else value)
                for name, value in stats._asdict().items())
            _write(args, data)
        else:
            args.outfile.write(
                '%s %s\n' % (obj.to_text(), _stats_text(stats)))


def cmd_sample(args):
    if args.kind == INPUT_TREE:
        samples = sample_trees(args.n, args.seed, args.count)
    else:
        if args.m is None:
            raise DispotreesError(
                'sample disposition needs --m',
                constants.STATUS_USAGE_ERROR)
        samples = sample_dispositions(args.m, args.n, args.seed, args.count)
    for index, obj in enumerate(samples):
        _write(args, obj, {
            'rng': RNG_ALGORITHM, 'seed': args.seed, 'index': index})


def cmd_verify(args):
    caps = parse_caps(args.caps) if args.caps else DEFAULT_CAPS
    if args.identity == constants.IDENTITY_ALL:
        identities = constants.IDENTITIES
    else:
        identities = (args.identity,)
    fixed = {'m': args.m, 'n': args.n, 'r': args.r}
    reports = verify_all(
        caps, args.parallel, identities, fixed, args.workers)
    for report in reports:
        _write(args, report)
    failed = [report for report in reports if not report.passed]
    if failed:
        LOGGER.error('%d of %d verification cells failed',
                     len(failed), len(reports))
        return constants.EXIT_VERIFICATION_FAILED
    LOGGER.info('all %d verification cells passed', len(reports))
    return constants.EXIT_SUCCESS


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format', choices=constants.FORMATS, default=constants.FORMAT_TEXT,
        help='object and report format, one per line (default: text)')
    common.add_argument(
        '--infile', type=argparse.FileType('r'), default='-',
        help='input file, one object per line (default: stdin)')
    common.add_argument(
        '--outfile', type=argparse.FileType('w'), default='-',
        help='output file (default: stdout)')
    common.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='log progress to stderr, twice for debug messages')

    parser = argparse.ArgumentParser(
        prog='dispotrees',
        description='Plane trees, dispositions and their bijection.')
    parser.add_argument('--version', action='version', version=VERSION)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    trees = subparsers.add_parser(
        'trees', parents=[common], help='enumerate plane trees')
    trees.add_argument('action', choices=['enumerate'])
    trees.add_argument('--n', type=int, required=True)
    trees.add_argument('--root', type=int)
    trees.set_defaults(function=cmd_trees)

    dispositions = subparsers.add_parser(
        'dispositions', parents=[common], help='enumerate dispositions')
    dispositions.add_argument('action', choices=['enumerate'])
    dispositions.add_argument('--m', type=int, required=True)
    dispositions.add_argument('--n', type=int, required=True)
    dispositions.set_defaults(function=cmd_dispositions)

    mapping = subparsers.add_parser(
        'map', parents=[common], help='convert objects read line by line')
    mapping.add_argument(
        'direction', choices=sorted(list(MAPS) + [MAP_PERM_TO_DISPOSITION]))
    mapping.add_argument(
        '--n', type=int,
        help='number of colors of perm-to-disposition input '
             '(default: the largest color used)')
    mapping.set_defaults(function=cmd_map)

    marks = subparsers.add_parser(
        'marks', parents=[common], help='print Prüfer marks')
    marks.add_argument(
        '--input', choices=sorted(PARSERS), default=INPUT_TREE)
    marks.set_defaults(function=cmd_marks)

    stats = subparsers.add_parser(
        'stats', parents=[common], help='print statistics')
    stats.add_argument('kind', choices=sorted(PARSERS))
    stats.set_defaults(function=cmd_stats)

    sample = subparsers.add_parser(
        'sample', parents=[common], help='draw uniform random objects')
    sample.add_argument('kind', choices=sorted(PARSERS))
    sample.add_argument('--n', type=int, required=True)
    sample.add_argument('--m', type=int, help='elements of dispositions')
    sample.add_argument('--seed', type=int, required=True)
    sample.add_argument('--count', type=int, default=1)
    sample.set_defaults(function=cmd_sample)

    verify = subparsers.add_parser(
        'verify', parents=[common],
        help='verify identities by exhaustive enumeration')
    verify.add_argument(
        '--identity', required=True,
        choices=constants.IDENTITIES + tuple(constants.IDENTITY_ALIASES) +
        (constants.IDENTITY_ALL,),
        help='identity to verify; thm2.1, q, thm2.2, eq3 and eq4 stand for '
             'dispositions, homogeneous, colored-cycles, trees and '
             'rooted-trees')
    verify.add_argument('--m', type=int)
    verify.add_argument('--n', type=int)
    verify.add_argument('--r', type=int)
    verify.add_argument(
        '--caps', help='grid limits as key=value pairs, such as m=5,trees=6')
    verify.add_argument(
        '--parallel', action='store_true',
        help='run verification cells in worker processes')
    verify.add_argument('--workers', type=int)
    verify.set_defaults(function=cmd_verify)
    return parser


def main(argv=None):
    """Run the command line and return the process exit code."""
    args = make_parser().parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[
            min(args.verbose, 2)],
        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr,
        force=True)
    try:
        code = args.function(args)
    except CoefficientOverflowError as exception:
        LOGGER.error('%s', exception)
        return constants.EXIT_OVERFLOW
    except DispotreesError as exception:
        LOGGER.error('%s', exception)
        return constants.EXIT_USAGE_ERROR
    finally:
        args.outfile.flush()
        for stream in (args.infile, args.outfile):
            if stream not in (sys.stdin, sys.stdout):
                stream.close()
    return constants.EXIT_SUCCESS if code is None else code
