from cli.compute import cmd_compute
from cli.verify import cmd_verify
from cli.sweep import cmd_sweep
from cli.random_check import cmd_random_check
from cli.optimize import cmd_optimize, cmd_grid

__all__ = ["cmd_compute", "cmd_verify", "cmd_sweep", "cmd_random_check", "cmd_optimize", "cmd_grid"]
