"""Define desk-scale caps and the experiment configuration of pllab."""

import logging
from collections import OrderedDict

import numpy as np

from pllab.PlLabException import ValidationError, ResourceLimitError

__all__ = ["CapOptions",
           "ExperimentConfig",
           "DEFAULT_CAPS",
           "DEFAULT_SEED",
           "get_caps"]

__author__ = "pllab developers"

log = logging.getLogger(__name__)

# Reproducible by default; --seed 0 requests fresh entropy.
DEFAULT_SEED = 20090417

MAX_SEED = 2 ** 64 - 1


class CapOptions(object):

    """Define the caps bounding every exhaustive or Monte Carlo computation.

    The mathematics has no finite bounds, so each limit is a configuration
    value which can be raised from the command line with --cap-<name>.
    """

    # name -> (default, lower bound, description)
    CAPS = OrderedDict([
        ("enumeration", (60, 1, "largest level enumerated partition by partition")),
        ("oracle", (40, 1, "largest n for the path-counting dimension oracle")),
        ("level", (20, 1, "deepest level of a graded graph checked exactly")),
        ("tableau", (12, 1, "largest n for exhaustive tableau sweeps")),
        ("prefix_k", (8, 1, "longest prefix of an induced prefix distribution")),
        ("prefix_shape", (40, 1, "largest diagram inducing a prefix distribution")),
        ("sampling", (100000, 1, "largest n of a growth sample")),
        ("exact_threshold", (200, 0, "largest n sampled with exact rational weights")),
        ("numbering", (10, 1, "longest monotone numbering enumerated")),
        ("centrality", (8, 1, "largest n of a centrality check")),
        ("zd_dim", (4, 2, "largest dimension d of the lattice Z^d_+")),
        ("qs_k", (4, 1, "longest prefix of a quasi-stationarity test")),
        ("minor_order", (6, 1, "largest order of a Toeplitz minor")),
        ("window", (14, 1, "largest index window of a minor sweep")),
        ("series", (64, 1, "largest truncation order of a power series")),
    ])

    def __init__(self, **kwargs):
        for name, (default, _lower, _desc) in self.CAPS.items():
            setattr(self, name, int(kwargs.pop(name, default)))
        if len(kwargs) > 0:
            raise ValidationError("Unknown cap(s): {c}".format(
                c=", ".join(sorted(kwargs))))

    def __str__(self):
        return "".join("cap_{n}={v}\n".format(n=name, v=getattr(self, name))
                       for name in self.CAPS)

    def validate(self):
        """Raise ValidationError if any cap is below its lower bound."""
        for name, (_default, lower, _desc) in self.CAPS.items():
            value = getattr(self, name)
            if value < lower:
                raise ValidationError(
                    "cap_{n}={v} is below its lower bound {l}".format(
                        n=name, v=value, l=lower))
        return self

    def check(self, name, value):
        """Raise ResourceLimitError naming the cap if value exceeds it."""
        cap = getattr(self, name)
        if value > cap:
            raise ResourceLimitError(
                "requested {v} exceeds cap_{n}={c}".format(v=value, n=name, c=cap))
        return value

    def to_dict(self):
        return OrderedDict((name, getattr(self, name)) for name in self.CAPS)


DEFAULT_CAPS = CapOptions()


def get_caps(caps=None):
    """Return caps, or the module-wide defaults if caps is None."""
    return DEFAULT_CAPS if caps is None else caps


def resolve_seed(seed):
    """Return a 64-bit seed; 0 draws fresh entropy and logs it."""
    if seed is None:
        return DEFAULT_SEED
    seed = int(seed)
    if seed < 0 or seed > MAX_SEED:
        raise ValidationError("seed {s} is not a 64-bit unsigned integer".format(s=seed))
    if seed == 0:
        seed = int(np.random.SeedSequence().entropy % (MAX_SEED + 1))
        log.info("Seed 0 requested, drew seed=%s from entropy.", seed)
    return seed


class ExperimentConfig(object):

    """Define one experiment: command, numeric parameters, seed, output."""

    FORMATS = ("json", "csv")

    def __init__(self, command, params=None, seed=DEFAULT_SEED, out=None,
                 fmt="json", caps=None, report=None):
        self.command = command
        self.params = OrderedDict() if params is None else OrderedDict(params)
        self.seed = seed
        self.out = out
        self.fmt = fmt
        self.caps = CapOptions() if caps is None else caps
        self.report = report

    def __str__(self):
        return "command={c}\n".format(c=self.command) + \
               "".join("{k}={v}\n".format(k=k, v=v) for k, v in self.params.items()) + \
               "seed={s}\n".format(s=self.seed) + \
               "out={o}\n".format(o=self.out) + \
               "format={f}\n".format(f=self.fmt) + \
               str(self.caps)

    @classmethod
    def from_args(cls, args):
        """Build a config from parsed command line arguments."""
        caps = CapOptions(**dict((name, getattr(args, "cap_" + name))
                                 for name in CapOptions.CAPS
                                 if getattr(args, "cap_" + name, None) is not None))
        skip = set(["subCommand", "seed", "out", "fmt", "report"])
        params = OrderedDict((k, v) for k, v in sorted(vars(args).items())
                             if k not in skip and not k.startswith("cap_")
                             and k not in ("log_level", "log_file", "debug",
                                           "quiet", "verbose", "version"))
        return cls(command=args.subCommand, params=params,
                   seed=getattr(args, "seed", DEFAULT_SEED),
                   out=getattr(args, "out", None),
                   fmt=getattr(args, "fmt", "json"),
                   caps=caps, report=getattr(args, "report", None))

    def validate(self):
        """Validate with precise messages, resolving seed 0 to entropy."""
        if self.command is None:
            raise ValidationError("No sub-command given.")
        if self.fmt not in self.FORMATS:
            raise ValidationError("Unknown output format {f}, expected one of {fs}".format(
                f=self.fmt, fs=", ".join(self.FORMATS)))
        self.caps.validate()
        self.seed = resolve_seed(self.seed)
        return self
