import sys

from . import run_quiverhecke

run_quiverhecke(sys.argv)
