#!/usr/bin/env python
from os import path
import os
import configparser

"""Define the test output path for pllab."""

THIS_DIR = path.dirname(path.abspath(__file__))
ROOT_DIR = path.dirname(THIS_DIR)
NOSE_CFG = path.join(THIS_DIR, "nose.cfg")


def _get_out_dir():
    """Get the output directory for pllab unit tests from nose.cfg."""
    nosecfg = configparser.ConfigParser()
    nosecfg.read(NOSE_CFG)
    if nosecfg.has_option('data', 'OUT_DIR'):
        return path.abspath(path.join(THIS_DIR, nosecfg.get('data', 'OUT_DIR')))
    return path.join(ROOT_DIR, "out")

OUT_DIR = _get_out_dir()
if not path.isdir(OUT_DIR):
    os.makedirs(OUT_DIR)
