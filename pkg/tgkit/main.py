import argparse
import inspect
import logging
import os
import sys

from tgkit._errors_ import TorusGraphError

def _configure_logging():
    level = os.environ.get('TGK_LOG', 'WARNING').upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

def _help(f):
    return next(line for line in f.__doc__.splitlines() if line.strip()).strip()

def _add_parser(subparsers, name, f):
    return subparsers.add_parser(name, help=_help(f), description=f.__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)

def build_parser():
    parser = argparse.ArgumentParser(prog="tgkit")
    subparsers = parser.add_subparsers(required=True)

### torus graphs ###

    from tgkit.workflows import validate
    signature_validate = inspect.signature(validate)
    parser_validate = _add_parser(subparsers, 'validate', validate)
    parser_validate.add_argument('-i', '--input', type=str, required=True)
    parser_validate.add_argument('--report', type=str, default=signature_validate.parameters['report'].default, help="CSV file for the diagnostics table")
    parser_validate.set_defaults(func=validate)

    ##################################################

    from tgkit.workflows import build, FORMATS
    signature_build = inspect.signature(build)
    parser_build = _add_parser(subparsers, 'build', build)
    parser_build.add_argument('-i', '--input', type=str, required=True)
    parser_build.add_argument('-o', '--output', type=str, default=signature_build.parameters['output'].default)
    parser_build.add_argument('--format', type=str, choices=FORMATS, default=signature_build.parameters['format'].default, help="Default: %(default)s")
    parser_build.add_argument('--unoriented', action='store_true')
    parser_build.set_defaults(func=build)

    ##################################################

    from tgkit.workflows import iso
    parser_iso = _add_parser(subparsers, 'iso', iso)
    parser_iso.add_argument('-i', '--input', type=str, nargs=2, required=True)
    parser_iso.add_argument('--twisted', action='store_true')
    parser_iso.add_argument('--oriented', action='store_true')
    parser_iso.set_defaults(func=iso)

    ##################################################

### surgery ###

    from tgkit.workflows import connect
    signature_connect = inspect.signature(connect)
    parser_sum = _add_parser(subparsers, 'sum', connect)
    parser_sum.add_argument('-i', '--input', type=str, nargs=2, required=True)
    parser_sum.add_argument('--site', type=int, nargs=2, default=signature_connect.parameters['site'].default, help="vertex of the first graph and of the second")
    parser_sum.add_argument('-o', '--output', type=str, default=signature_connect.parameters['output'].default)
    parser_sum.add_argument('--format', type=str, choices=FORMATS, default=signature_connect.parameters['format'].default, help="Default: %(default)s")
    parser_sum.set_defaults(func=connect)

    ##################################################

    from tgkit.workflows import split
    signature_split = inspect.signature(split)
    parser_split = _add_parser(subparsers, 'split', split)
    parser_split.add_argument('-i', '--input', type=str, required=True)
    parser_split.add_argument('--cut', type=int, nargs=3, default=signature_split.parameters['cut'].default, help="three edge ids")
    parser_split.add_argument('-o', '--output', type=str, default=signature_split.parameters['output'].default)
    parser_split.add_argument('--format', type=str, choices=FORMATS, default=signature_split.parameters['format'].default, help="Default: %(default)s")
    parser_split.set_defaults(func=split)

    ##################################################

### classification ###

    from tgkit.workflows import classify
    signature_classify = inspect.signature(classify)
    parser_classify = _add_parser(subparsers, 'classify', classify)
    parser_classify.add_argument('-i', '--input', type=str, required=True)
    parser_classify.add_argument('-o', '--output', type=str, default=signature_classify.parameters['output'].default)
    parser_classify.add_argument('--format', type=str, choices=FORMATS, default=signature_classify.parameters['format'].default, help="Default: %(default)s")
    parser_classify.add_argument('--report', type=str, default=signature_classify.parameters['report'].default, help="CSV file for the leaf table")
    parser_classify.add_argument('--dedup', type=str, choices=['exact', 'lifts'], default=signature_classify.parameters['dedup'].default)
    parser_classify.set_defaults(func=classify)

    ##################################################

    from tgkit.workflows import enumerate_lambdas
    signature_enumerate = inspect.signature(enumerate_lambdas)
    parser_enumerate = _add_parser(subparsers, 'enumerate', enumerate_lambdas)
    parser_enumerate.add_argument('-i', '--input', type=str, required=True)
    parser_enumerate.add_argument('--bound', type=int, default=signature_enumerate.parameters['bound'].default, help="Default: %(default)s")
    parser_enumerate.add_argument('--dedup', type=str, choices=['exact', 'lifts'], default=signature_enumerate.parameters['dedup'].default)
    parser_enumerate.add_argument('--shards', type=int, default=signature_enumerate.parameters['shards'].default, help="Default: %(default)s")
    parser_enumerate.add_argument('--shard', type=int, default=signature_enumerate.parameters['shard'].default, help="Default: %(default)s")
    parser_enumerate.add_argument('--limit', type=int, default=signature_enumerate.parameters['limit'].default)
    parser_enumerate.add_argument('--normalized', action='store_true', help="standard basis on the facets around vertex 0")
    parser_enumerate.add_argument('-o', '--output', type=str, default=signature_enumerate.parameters['output'].default)
    parser_enumerate.set_defaults(func=enumerate_lambdas)

    return parser

def run(argv=None):
    """Parse one command line, dispatch it and return the exit status"""
    args = build_parser().parse_args(argv)
    function = args.func
    function_args = vars(args)
    del function_args['func']
    try:
        return function(**function_args) or 0
    except TorusGraphError as err:
        print("error: %s: %s" % (type(err).__name__, err), file=sys.stderr)
        return err.exit_code
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2

def main():
    _configure_logging()
    sys.exit(run())
