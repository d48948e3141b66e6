from .main import build_parser, main
from .repro import get_available_cases, run_case, run_cases
from .scenario import Scenario, run_scenario

__all__ = [
    'main',
    'build_parser',
    'Scenario',
    'run_scenario',
    'run_case',
    'run_cases',
    'get_available_cases',
]
