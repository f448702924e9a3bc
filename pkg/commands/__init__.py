"""
Commands package - subcommand groups for the hookcalc CLI
"""
from .sorting import sorting_cmds
from .hooks import vhc_cmds
from .trees import tree_cmds
from .partitions import partition_cmds
from .cumulants import cumulant_cmds
from .stats import stat_cmds
from .verify import verify_cmds

ALL_COMMANDS = [
    sorting_cmds,
    vhc_cmds,
    tree_cmds,
    partition_cmds,
    cumulant_cmds,
    stat_cmds,
    verify_cmds,
]
