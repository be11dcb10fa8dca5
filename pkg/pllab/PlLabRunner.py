"""This script defines class PlLab, the pllab command line front end."""
import sys
import json
import logging
import os.path as op
from collections import OrderedDict

from pbcommand.cli.core import pacbio_args_runner
from pbcommand.utils import setup_log

from pllab.PlLabException import PlLabException, ValidationError
from pllab.PlLabOptions import get_argument_parser
from pllab.LabOptions import ExperimentConfig
from pllab.Utils import parse_int_list, parse_rational_list, rational_str, get_num_workers
from pllab.io.JsonIO import dumps_json, dumps_csv, write_artifact, load_json_arg
from pllab.young.YoungUtils import Partition
from pllab.young.Tableau import StandardTableau
from pllab.graph.GradedGraph import young_graph_adapter, pascal_graph, GradedGraph, \
    is_plancherel_graph
from pllab.plancherel.Measures import level_measure, check_coherence, \
    induced_prefix_distribution, prefix_distance
from pllab.plancherel.Growth import sample_growth
from pllab.posets.Posets import get_poset, lattice_z2
from pllab.posets.Numberings import MonotoneNumbering, IdealSpec, ideal_density, \
    density_sequence, enumerate_numberings, lattice_shift
from pllab.transfer.Transfer import transfer_step
from pllab.transfer.QuasiStationarity import quasi_stationarity_test
from pllab.totpos.TotalPositivity import CoefficientSequence, ThomaParams, \
    check_total_positivity, thoma_coefficients, character_gf
from pllab.stats.RowGrowth import first_row_statistics, sublinearity_check
from pllab.SelfTest import run_selftest

log = logging.getLogger(__name__)


class Artifact(object):

    """What a sub-command emits: a JSON object, CSV rows, and maybe a summary."""

    def __init__(self, obj, header=None, rows=None, summary=None, status=0, text=None):
        self.obj = obj
        self.text = text
        self.header = header
        self.rows = rows
        self.summary = summary
        self.status = status


class PlLab(object):

    """
    Class PlLab dispatches pllab sub-commands: exact measures (measure,
    coherence, prefix-dist, plgraph), sampling (sample, first-row,
    sublinearity, qs-test), posets (numberings, density), the transfer,
    total positivity (tp-check, thoma, chargf) and the selftest.
    """

    def __init__(self, args, stdout=None):
        self.args = args
        self.config = None
        self.stdout = sys.stdout if stdout is None else stdout

    def start(self):
        return self.run()

    def run(self):
        """Run one sub-command; return 0, 1 (invalid input) or 2 (cap exceeded)."""
        cmd = getattr(self.args, "subCommand", None)
        try:
            self.config = ExperimentConfig.from_args(self.args).validate()
            log.debug("Experiment configuration:\n%s", self.config)
            handler = self.HANDLERS.get(cmd)
            if handler is None:
                raise ValidationError("Unknown command passed to pllab: {c}".format(c=cmd))
            artifact = handler(self)
            self._emit(artifact)
            return artifact.status
        except PlLabException as e:
            e.cmd = cmd
            logging.error(str(e))
            sys.stderr.write("pllab: error: {e}\n".format(e=e))
            return e.exit_code
        except Exception:
            logging.exception("Exiting pllab with return code 1.")
            return 1

    def _emit(self, artifact):
        cfg = self.config
        if cfg.report is not None and artifact.summary is None:
            raise ValidationError("{c} has no summary report".format(c=cfg.command))
        if artifact.text is not None:
            text = artifact.text
        elif cfg.fmt == "csv" and artifact.header is not None:
            text = dumps_csv(artifact.header, artifact.rows)
        else:
            text = dumps_json(artifact.obj)
        write_artifact(text, cfg.out, self.stdout)
        if cfg.report is not None:
            artifact.summary.write(cfg.report)

    @property
    def caps(self):
        return self.config.caps

    def do_measure(self):
        m = level_measure(self.args.n, self.caps)
        return Artifact(OrderedDict([("n", m.n), ("weights", m.to_json())]),
                        ["partition", "weight"],
                        [[str(lam), w] for lam, w in m.items()])

    def do_sample(self):
        a = self.args
        if a.trials < 1:
            raise ValidationError("trials must be >= 1")
        samples, rows = [], []
        for trial in range(a.trials):
            s = sample_growth(a.n, self.config.seed, trial, self.caps)
            lam = s.tableau.shape
            item = OrderedDict([("trial", trial), ("shape", lam.to_json())])
            if a.with_tableau:
                item["tableau"] = s.tableau.to_json()
            samples.append(item)
            rows.append([trial, str(lam), lam[0], len(lam)])
        obj = OrderedDict([("n", a.n), ("seed", self.config.seed), ("samples", samples)])
        return Artifact(obj, ["trial", "shape", "lambda1", "lambda1_prime"], rows)

    def do_coherence(self):
        r = check_coherence(self.args.n, self.caps)
        obj = OrderedDict([("n", r.n), ("holds", r.holds), ("tableaux_checked", r.checked),
                           ("witness", None if r.witness is None else r.witness.to_json())])
        return Artifact(obj, ["n", "holds", "tableaux_checked"],
                        [[r.n, r.holds, r.checked]])

    def do_prefix_dist(self):
        lam = Partition(parse_int_list(self.args.shape))
        k = self.args.k
        dist = induced_prefix_distribution(lam, k, self.caps)
        distance = prefix_distance(lam, k, self.caps)
        obj = OrderedDict([("shape", lam.to_json()), ("k", k),
                           ("distribution", OrderedDict((str(t), rational_str(p))
                                                        for t, p in dist.items())),
                           ("distance", rational_str(distance)),
                           ("distance_float", float(distance))])
        return Artifact(obj, ["prefix", "probability"],
                        [[str(t), p] for t, p in dist.items()])

    def do_plgraph(self):
        a = self.args
        if a.graph == "young":
            g = young_graph_adapter(a.up_to + 1, self.caps)
        elif a.graph == "pascal":
            g = pascal_graph(a.up_to + 1)
        else:
            g = GradedGraph.from_json(load_json_arg(a.graph))
        r = is_plancherel_graph(g, a.up_to, self.caps)
        witness = None
        if r.witness is not None:
            v, expected, actual = r.witness
            witness = OrderedDict([("vertex", v), ("level", r.level),
                                   ("expected", rational_str(expected)),
                                   ("actual", rational_str(actual))])
        obj = OrderedDict([("graph", a.graph), ("up_to", a.up_to), ("holds", r.holds),
                           ("witness", witness)])
        return Artifact(obj, ["graph", "up_to", "holds"], [[a.graph, a.up_to, r.holds]])

    def do_numberings(self):
        a = self.args
        poset = get_poset(a.poset, a.window, self.caps)
        numberings = enumerate_numberings(poset, a.n, self.caps)
        obj = OrderedDict([("poset", a.poset), ("n", a.n), ("count", len(numberings)),
                           ("numberings", [phi.to_json() for phi in numberings])])
        return Artifact(obj, ["index", "numbering"],
                        [[i, json.dumps(phi.to_json(), separators=(",", ":"))]
                         for i, phi in enumerate(numberings)])

    def do_density(self):
        a = self.args
        ideal = IdealSpec.parse(a.ideal)
        if a.numbering is not None:
            phi = MonotoneNumbering.from_json(load_json_arg(a.numbering), lattice_z2())
        else:
            phi = MonotoneNumbering.from_tableau(
                sample_growth(a.n, self.config.seed, 0, self.caps).tableau)
        if a.omit != "none":
            phi = lattice_shift(phi, a.omit)
        seq = density_sequence(phi, ideal)
        obj = OrderedDict([("ideal", str(ideal)), ("n", len(phi)),
                           ("density", rational_str(ideal_density(phi, ideal))),
                           ("sequence", [[k, rational_str(d)] for k, d in seq])])
        return Artifact(obj, ["k", "density"], seq)

    def do_transfer(self):
        t = StandardTableau.from_json(load_json_arg(self.args.tableau_json))
        ret = transfer_step(t)
        obj = OrderedDict([("tableau", ret.to_json()), ("shape", ret.shape.to_json())])
        return Artifact(obj)

    def do_qs_test(self):
        a = self.args
        r = quasi_stationarity_test(a.k, a.n, a.trials, self.config.seed, a.significance,
                                    self.caps, get_num_workers())
        return Artifact(r.to_dict(), r.CSV_HEADER, r.csv_rows(), summary=r)

    def _coefficients(self, arg, N):
        if arg in ("exp", "one-plus-z", "geometric"):
            return CoefficientSequence.named(arg, N)
        return CoefficientSequence.from_json(load_json_arg(arg))

    def do_tp_check(self):
        a = self.args
        c = self._coefficients(a.coeffs, a.window)
        r = check_total_positivity(c, a.order, a.window, self.caps)
        witness = None
        if r.witness is not None:
            rows, cols, value = r.witness
            witness = OrderedDict([("rows", list(rows)), ("cols", list(cols)),
                                   ("value", rational_str(value))])
        obj = OrderedDict([("verdict", r.verdict), ("max_order", r.max_order),
                           ("window", r.window), ("minors_checked", r.checked),
                           ("witness", witness)])
        return Artifact(obj, ["verdict", "max_order", "window", "minors_checked"],
                        [[r.verdict, r.max_order, r.window, r.checked]])

    def _series_artifact(self, c):
        return Artifact(OrderedDict([("N", c.N), ("coefficients", c.to_json())]),
                        ["k", "coefficient"], [[k, x] for k, x in enumerate(c.coeffs)])

    def do_thoma(self):
        a = self.args
        p = ThomaParams(parse_rational_list(a.alpha), parse_rational_list(a.beta),
                        a.gamma, a.m)
        return self._series_artifact(thoma_coefficients(p, a.N, self.caps))

    def do_chargf(self):
        arg = self.args.chi.strip()
        if arg.startswith("[") or op.isfile(arg):
            chi = load_json_arg(arg)
        else:
            chi = parse_rational_list(arg)
        if not isinstance(chi, list):
            raise ValidationError("chi must be a list of rationals")
        return self._series_artifact(character_gf(chi, self.args.N, self.caps))

    def do_first_row(self):
        a = self.args
        r = first_row_statistics(a.n, a.trials, self.config.seed, self.caps, get_num_workers())
        if a.emit_csv is not None:
            write_artifact(dumps_csv(r.CSV_HEADER, r.csv_rows()), a.emit_csv)
        return Artifact(r.to_dict(), r.CSV_HEADER, r.csv_rows(), summary=r)

    def do_sublinearity(self):
        a = self.args
        r = sublinearity_check(parse_int_list(a.n_list), a.trials, self.config.seed,
                               self.caps, get_num_workers())
        return Artifact(r.to_dict(), r.CSV_HEADER, r.csv_rows(), summary=r)

    def do_selftest(self):
        r = run_selftest()
        if self.args.as_json or self.config.out is not None or self.config.fmt == "csv":
            return Artifact(r.to_dict(), r.CSV_HEADER, r.csv_rows(), summary=r,
                            status=0 if r.passed else 1)
        return Artifact(None, summary=r, status=0 if r.passed else 1, text=str(r) + "\n")

    HANDLERS = {
        "measure": do_measure,
        "sample": do_sample,
        "coherence": do_coherence,
        "prefix-dist": do_prefix_dist,
        "plgraph": do_plgraph,
        "numberings": do_numberings,
        "density": do_density,
        "transfer": do_transfer,
        "qs-test": do_qs_test,
        "tp-check": do_tp_check,
        "thoma": do_thoma,
        "chargf": do_chargf,
        "first-row": do_first_row,
        "sublinearity": do_sublinearity,
        "selftest": do_selftest,
    }


def args_runner(args):
    return PlLab(args).start()


def main(argv=sys.argv):
    mp = get_argument_parser()
    if len(argv) < 2:
        mp.print_usage(sys.stderr)
        return 1
    try:
        return pacbio_args_runner(
            argv=argv[1:],
            parser=mp,
            args_runner_func=args_runner,
            alog=log,
            setup_log_func=setup_log)
    except SystemExit as e:
        # argparse usage errors exit 2; pllab reserves 2 for exceeded caps
        return 0 if e.code in (0, None) else 1

if __name__ == "__main__":
    sys.exit(main())
