"""Define report summaries of pllab experiments."""

from collections import OrderedDict
from fractions import Fraction

from pbcommand.models.report import Report, Attribute

from pllab.Utils import atomic_write, rational_str

__all__ = ["Summary",
           "RowGrowthReport",
           "SublinearityReport",
           "TransferReport",
           "SelfTestReport"]


def _plain(val):
    """Fractions become "p/q" strings, numpy scalars become Python numbers."""
    if isinstance(val, Fraction):
        return rational_str(val)
    if hasattr(val, "item") and not isinstance(val, (list, tuple, dict)):
        return val.item()
    return val


class Summary(object):

    """Super class of experiment reports: ordered labelled attributes."""

    REPORT_ID = None  # used for pbcommand report model
    ATTR_LABELS = OrderedDict()

    @property
    def fieldsIDs(self):
        """IDs of the scalar attributes, in report order."""
        return list(self.ATTR_LABELS.keys())

    @property
    def fieldsNames(self):
        """Return all fields names in a list."""
        return [self.ATTR_LABELS[fsid] for fsid in self.fieldsIDs]

    @property
    def fields(self):
        """Return fields values in a list. Have to match self.fieldsNames"""
        return [_plain(getattr(self, name)) for name in self.fieldsIDs]

    def __str__(self):
        assert len(self.fieldsNames) == len(self.fields)
        return "\n".join(["{name}={val}".format(name=name, val=val)
                          for name, val in zip(self.fieldsNames, self.fields)])

    def to_dict(self):
        """Scalar attributes plus any extra payload, JSON-ready."""
        ret = OrderedDict(zip(self.fieldsIDs, self.fields))
        ret.update(self.extra())
        return ret

    def extra(self):
        return OrderedDict()

    def to_report(self):
        """Convert a summary object to pbcommand.report object."""
        attributes = [Attribute(id_=attribute_id, value=attribute_val, name=attribute_name)
                      for attribute_id, attribute_name, attribute_val
                      in zip(self.fieldsIDs, self.fieldsNames, self.fields)
                      if isinstance(attribute_val, (int, float, str, bool))]
        return Report(self.REPORT_ID, attributes=attributes)

    def write(self, outFile):
        """Write summary to outFile, a pbcommand report if it ends in .json."""
        if outFile.endswith(".json"):
            atomic_write(outFile, self.to_report().to_json())
        else:
            atomic_write(outFile, self.__str__() + "\n")


class RowGrowthReport(Summary):
    REPORT_ID = "pllab_first_row"
    ATTR_LABELS = OrderedDict([
        ("n", "Diagram size"),
        ("trials", "Number of trials"),
        ("seed", "Seed"),
        ("mean_ratio", "Mean of lambda1/sqrt(n)"),
        ("std_ratio", "Standard deviation of lambda1/sqrt(n)"),
        ("mean_ratio_prime", "Mean of lambda1'/sqrt(n)"),
        ("mean_density", "Mean of lambda1/n"),
        ("row_column_tv", "Total variation between laws of lambda1 and lambda1'"),
    ])
    CSV_HEADER = ["trial", "lambda1", "lambda1_prime", "ratio"]

    def __init__(self, n, trials, seed, per_trial):
        self.n = n
        self.trials = trials
        self.seed = seed
        # [(trial, lambda1, lambda1_prime, ratio)]
        self.per_trial = per_trial
        self.mean_ratio = None
        self.std_ratio = None
        self.mean_ratio_prime = None
        self.mean_density = None
        self.row_column_tv = None

    def csv_rows(self):
        return [list(row) for row in self.per_trial]

    def extra(self):
        return OrderedDict([("per_trial", [OrderedDict(zip(self.CSV_HEADER, row))
                                           for row in self.per_trial])])


class SublinearityReport(Summary):
    REPORT_ID = "pllab_sublinearity"
    ATTR_LABELS = OrderedDict([
        ("trials", "Number of trials per size"),
        ("seed", "Seed"),
        ("decreasing", "Mean lambda1/n strictly decreasing"),
    ])
    CSV_HEADER = ["n", "mean_density"]

    def __init__(self, n_list, trials, seed, means):
        self.n_list = list(n_list)
        self.trials = trials
        self.seed = seed
        self.means = list(means)
        self.decreasing = all(a > b for a, b in zip(self.means, self.means[1:]))

    def csv_rows(self):
        return [[n, m] for n, m in zip(self.n_list, self.means)]

    def extra(self):
        return OrderedDict([("n_list", self.n_list), ("mean_density", self.means)])


class TransferReport(Summary):
    REPORT_ID = "pllab_quasi_stationarity"
    ATTR_LABELS = OrderedDict([
        ("k", "Prefix size"),
        ("n", "Tableau size"),
        ("trials", "Number of trials"),
        ("seed", "Seed"),
        ("statistic", "Chi-square statistic"),
        ("critical", "Chi-square critical value"),
        ("significance", "Significance level"),
        ("tv_distance", "Total variation from exact Pl_k"),
        ("passed", "Prefix law invariant under the transfer"),
    ])
    CSV_HEADER = ["prefix", "count", "frequency", "expected"]

    def __init__(self, k, n, trials, seed, statistic, critical, significance,
                 tv_distance, counts, expected):
        self.k = k
        self.n = n
        self.trials = trials
        self.seed = seed
        self.statistic = statistic
        self.critical = critical
        self.significance = significance
        self.tv_distance = tv_distance
        # OrderedDict tableau -> count / exact probability
        self.counts = counts
        self.expected = expected
        self.passed = bool(statistic <= critical)

    @property
    def frequencies(self):
        return OrderedDict((t, float(c) / self.trials) for t, c in self.counts.items())

    def csv_rows(self):
        return [[str(t), c, float(c) / self.trials, rational_str(self.expected[t])]
                for t, c in self.counts.items()]

    def extra(self):
        return OrderedDict([("prefixes", [OrderedDict(zip(self.CSV_HEADER, row))
                                          for row in self.csv_rows()])])


class SelfTestReport(Summary):
    REPORT_ID = "pllab_selftest"
    ATTR_LABELS = OrderedDict([
        ("num_identities", "Number of identities checked"),
        ("num_failed", "Number of identities failed"),
    ])
    CSV_HEADER = ["identity", "passed", "witness"]

    def __init__(self, results):
        # [(identity, passed, witness or None)]
        self.results = list(results)

    @property
    def num_identities(self):
        return len(self.results)

    @property
    def num_failed(self):
        return sum(1 for _, ok, _ in self.results if not ok)

    @property
    def passed(self):
        return self.num_failed == 0

    def __str__(self):
        return "\n".join("{i}: {s}{w}".format(
            i=name, s="PASS" if ok else "FAIL",
            w="" if witness is None else " (witness {w})".format(w=witness))
            for name, ok, witness in self.results)

    def csv_rows(self):
        return [[name, ok, "" if witness is None else witness]
                for name, ok, witness in self.results]

    def extra(self):
        return OrderedDict([("results", [OrderedDict(zip(self.CSV_HEADER, row))
                                         for row in self.csv_rows()])])
