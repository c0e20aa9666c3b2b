"""Command-line front end and the instance generator it uses."""

from .instances import InstanceSpec, random_instance
from .main import main
from .suites import Report, run_suite

__all__ = ["InstanceSpec", "Report", "main", "random_instance", "run_suite"]
