"""argparse front end: squier-lab COMMAND INPUT... [options]"""

import argparse
import sys
from typing import List, Optional

from ..io import error_report, write_report
from ..utils.exceptions import SquierLabError
from .commands import ERROR, run
from .config import COMMANDS, LOOP_CHOICES, REPORT_CHOICES, RunConfig


EPILOG = """
Examples:
  squier-lab complete data/corpus/c3.pres --no-interreduce
  squier-lab normalize data/corpus/c3.pres --word "a a a a"
  squier-lab build data/corpus/trivial_x.pres --truncate 4 --p-cells q,t
  squier-lab aspherical data/corpus/trivial_x.pres --truncate 6 --margin 2 --report cycles
  squier-lab boundary-check data/corpus/trivial_x.pres --cycle cycle.json --truncate 5
  squier-lab peiffer reduce data/corpus/trivial_x.pres --sequence seq.txt --max-steps 32
  squier-lab peiffer data/corpus/trivial_x.pres --seq "[(1; r1; +1), (1; r1; -1)]"
  squier-lab dominion data/corpus/s3.csv --sub 0,3
  squier-lab wdom-probe data/corpus/idempotent.pres --sub a --element a

Exit codes: 0 success, 1 error, 2 inconclusive.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='squier-lab',
        description='String rewriting, Squier complexes and Peiffer calculus probes',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument('command', choices=COMMANDS, help='Command to run')
    parser.add_argument('inputs', nargs='+',
                        help="Presentation file or monoid table; peiffer accepts a leading 'reduce'")
    parser.add_argument('--truncate', '-L', type=int, dest='length_bound', help='Truncation length L')
    parser.add_argument('--margin', '-m', type=int, help='Inner margin m (L >= m >= 0)')
    parser.add_argument('--word', help='Word literal for normalize')
    parser.add_argument('--seq', dest='sequence', help='Y-sequence literal for peiffer')
    parser.add_argument('--sequence', dest='sequence_file', help='File holding a Y-sequence literal')
    parser.add_argument('--cycle', help='Cycle JSON file for boundary-check')
    parser.add_argument('--sub', help='Comma-separated submonoid elements or generator words')
    parser.add_argument('--element', help='Word tested by wdom-probe')
    parser.add_argument('--dim', type=int, dest='dimension', help='Only this homology dimension')
    parser.add_argument('--three-cells', action='store_true', help='Attach 3-cells')
    parser.add_argument('--loops', choices=LOOP_CHOICES, default='auto', help='Loop cells to attach')
    parser.add_argument('--p-cells', dest='p_cells',
                        help='Comma-separated Pride loop families to attach (q, t)')
    parser.add_argument('--report', choices=REPORT_CHOICES, default='summary',
                        help='aspherical: add the inner cycles with "cycles"')
    parser.add_argument('--bound', type=int, default=6, dest='confluence_bound',
                        help='Word length bound for confluent (default: 6)')
    parser.add_argument('--step-limit', type=int, help='Normalization step limit')
    parser.add_argument('--max-rules', type=int, help='Knuth-Bendix rule cap')
    parser.add_argument('--max-lhs-len', type=int, help='Knuth-Bendix lhs length cap')
    parser.add_argument('--no-interreduce', action='store_true',
                        help='Skip inter-reduction after completion')
    parser.add_argument('--max-cells', type=int, help='Cell cap for truncated builds')
    parser.add_argument('--max-steps', type=int, help='Peiffer search step cap')
    parser.add_argument('--max-states', type=int, help='Peiffer search state cap')
    parser.add_argument('--subgroup-bound', type=int, help='Product length bound for wdom-probe')
    parser.add_argument('--seed', type=int, default=0, help='Seed echoed into the report')
    parser.add_argument('--output', '-o', help='Also write the JSON report here')
    parser.add_argument('--config', dest='config_path', help='YAML file overriding config/defaults.yaml')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command, print the JSON report to stdout"""
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(**vars(args))
    except SquierLabError as exc:
        print(write_report(error_report(args.command, {}, exc)))
        return ERROR
    code, report = run(config)
    print(write_report(report, config.output))
    return code


if __name__ == '__main__':
    sys.exit(main())
