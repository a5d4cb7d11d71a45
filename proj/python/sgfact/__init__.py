"""Factorization invariants of reduced affine monoids."""

import json

from ._core import (
    EXIT_CROSS_CHECK,
    EXIT_INFINITE,
    EXIT_INVALID_INPUT,
    EXIT_NOT_REDUCED,
    EXIT_OK,
    SgfactError,
    apery,
    ceq,
    f2l,
    lset,
    run,
    tset,
)

__all__ = [
    "EXIT_CROSS_CHECK",
    "EXIT_INFINITE",
    "EXIT_INVALID_INPUT",
    "EXIT_NOT_REDUCED",
    "EXIT_OK",
    "SgfactError",
    "apery",
    "ceq",
    "cli",
    "f2l",
    "lset",
    "run",
    "tset",
]


def cli(command, presentation=None, **options):
    """Run a subcommand and return (exit code, parsed JSON or None).

    Keyword options become flags: order="lex" gives --order lex, any_length=True
    gives --any-length. Non-string values are JSON encoded.
    """
    args = [command]
    if presentation is not None:
        args += ["--input", json.dumps(presentation)]
    for key, value in options.items():
        flag = "--" + key.replace("_", "-")
        if value is True:
            args.append(flag)
        elif value is not False and value is not None:
            args += [flag, value if isinstance(value, str) else json.dumps(value)]
    code, out, _ = run(args)
    return code, json.loads(out) if out else None
