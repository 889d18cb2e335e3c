"""Independent oracles and the golden fixture suite."""
from .fixtures import Fixture, Report, load_fixtures, printed_equivalent, run_fixture_suite
from .oracles import oracle_enumerate_hpps, oracle_trace, trace_agrees
