"""Add argument parsers for every pllab sub-command."""

from pbcommand.cli.core import get_default_argparser_with_base_opts

from pllab.LabOptions import CapOptions, DEFAULT_SEED
from pllab.__init__ import get_version

__all__ = ["get_argument_parser",
           "add_common_arguments",
           "BaseConstants"]

__author__ = "pllab developers"


class BaseConstants(object):
    PARSER_DESC = "Exact and Monte Carlo experiments on Plancherel measures, " + \
                  "growth processes, monotone numberings and total positivity."
    SEED_DEFAULT = DEFAULT_SEED
    TRIALS_DEFAULT = 100
    QS_TRIALS_DEFAULT = 10000
    SIGNIFICANCE_DEFAULT = 0.01
    ORDER_DEFAULT = 3
    WINDOW_DEFAULT = 8
    SERIES_N_DEFAULT = 16
    NONRIGID_WINDOW_DEFAULT = 8


def add_common_arguments(parser):
    """Add --seed, --format, --out, --report and one --cap-<name> per cap."""
    parser.add_argument("--seed", type=int, default=BaseConstants.SEED_DEFAULT,
                        help="64-bit seed, 0 draws entropy (default: %s)" %
                        BaseConstants.SEED_DEFAULT)
    parser.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json",
                        help="Output format (default: json)")
    parser.add_argument("--out", type=str, default=None,
                        help="Output file, written atomically (default: stdout)")
    parser.add_argument("--report", type=str, default=None,
                        help="Also write a pbcommand JSON report of the summary")
    cap_group = parser.add_argument_group("Caps")
    for name, (default, _lower, desc) in CapOptions.CAPS.items():
        cap_group.add_argument("--cap-" + name.replace("_", "-"), dest="cap_" + name,
                               type=int, default=None,
                               help="{d} (default: {v})".format(d=desc, v=default))


def _add(subparsers, name, description):
    parser = subparsers.add_parser(name, description=description, help=description)
    add_common_arguments(parser)
    return parser


def get_argument_parser():
    ap = get_default_argparser_with_base_opts(get_version(), BaseConstants.PARSER_DESC,
                                              default_level="WARN")
    subparsers = ap.add_subparsers(dest="subCommand")

    p = _add(subparsers, "measure", "Exact Plancherel measure on level n")
    p.add_argument("--n", type=int, required=True)

    p = _add(subparsers, "sample", "Draw tableaux from the Plancherel growth process")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--with-tableau", dest="with_tableau", action="store_true",
                   help="Emit the sampled tableaux, not only their shapes")

    p = _add(subparsers, "coherence", "Exact coherence sweep over all n-cell tableaux")
    p.add_argument("--n", type=int, required=True)

    p = _add(subparsers, "prefix-dist", "Prefix law induced by a diagram and its distance to Pl_k")
    p.add_argument("--shape", type=str, required=True, help="Diagram, e.g. 3,1 or [3,1]")
    p.add_argument("--k", type=int, required=True)

    p = _add(subparsers, "plgraph", "Check the Plancherel-graph property")
    p.add_argument("--graph", type=str, default="young",
                   help="young, pascal, or a graph JSON file (default: young)")
    p.add_argument("--up-to", dest="up_to", type=int, default=10)

    p = _add(subparsers, "numberings", "Enumerate monotone numberings of a poset")
    p.add_argument("--poset", type=str, default="z2", help="z2, z3, z4 or nonrigid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, default=BaseConstants.NONRIGID_WINDOW_DEFAULT,
                   help="Window of the nonrigid poset (default: %s)" %
                   BaseConstants.NONRIGID_WINDOW_DEFAULT)

    p = _add(subparsers, "density", "Density of an ideal along a numbering")
    p.add_argument("--ideal", type=str, default="rows=0",
                   help="e.g. rows=0, cols=0,1, cells=0:0,0:1 or all (default: rows=0)")
    p.add_argument("--numbering", type=str, default=None,
                   help="Numbering JSON (inline or file); default samples one")
    p.add_argument("--n", type=int, default=10000,
                   help="Size of the sampled numbering (default: 10000)")
    p.add_argument("--omit", choices=["none", "row", "column", "both"], default="none",
                   help="Shift the numbering by omitting a row and/or column first")

    p = _add(subparsers, "transfer", "Apply the transfer to a tableau")
    p.add_argument("--tableau-json", dest="tableau_json", type=str, required=True,
                   help="Tableau rows, e.g. [[1,3],[2]], inline or a file")

    p = _add(subparsers, "qs-test", "Quasi-stationarity of Pl under the transfer")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--trials", type=int, default=BaseConstants.QS_TRIALS_DEFAULT)
    p.add_argument("--significance", type=float, default=BaseConstants.SIGNIFICANCE_DEFAULT)

    p = _add(subparsers, "tp-check", "Bounded total positivity sweep of Toeplitz minors")
    p.add_argument("--coeffs", type=str, required=True,
                   help="exp, one-plus-z, geometric, or a JSON array of p/q strings")
    p.add_argument("--order", type=int, default=BaseConstants.ORDER_DEFAULT)
    p.add_argument("--window", type=int, default=BaseConstants.WINDOW_DEFAULT)

    p = _add(subparsers, "thoma", "Taylor coefficients of an Edrei-Thoma function")
    p.add_argument("--alpha", type=str, default="", help="e.g. 1/2,1/4")
    p.add_argument("--beta", type=str, default="")
    p.add_argument("--gamma", type=str, default="0")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--N", dest="N", type=int, default=BaseConstants.SERIES_N_DEFAULT)

    p = _add(subparsers, "chargf", "Coefficients of exp(sum chi(n) z^n / n)")
    p.add_argument("--chi", type=str, required=True,
                   help="chi(1), chi(2), ... as a JSON array or comma separated")
    p.add_argument("--N", dest="N", type=int, default=BaseConstants.SERIES_N_DEFAULT)

    p = _add(subparsers, "first-row", "Statistics of lambda1/sqrt(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=BaseConstants.TRIALS_DEFAULT)
    p.add_argument("--emit-csv", dest="emit_csv", type=str, default=None,
                   help="Also write per-trial CSV: trial,lambda1,lambda1_prime,ratio")

    p = _add(subparsers, "sublinearity", "Mean lambda1/n over increasing sizes")
    p.add_argument("--n-list", dest="n_list", type=str, default="100,1000,10000")
    p.add_argument("--trials", type=int, default=50)

    p = _add(subparsers, "selftest", "Run the exact-identity suite")
    p.add_argument("--json", dest="as_json", action="store_true",
                   help="Machine-readable result list")
    return ap
