#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exception hierarchy of the package.

All exceptions derive from :class:`UnchainedError` and carry an optional
``witness`` payload: the element, edge, cycle or equation that made the
operation fail. The command-line interface maps the three families onto
exit codes:

    * :class:`VerificationError` and subclasses --> exit code 2
    * :class:`SizeCapExceeded`                  --> exit code 3
    * :class:`ParseError`                       --> exit code 4
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-class-docstring

from typing import Any

# Kept in sync with `BaseConfig.FORMAT_TAG`. Not imported from there because
# `BaseConfig` itself imports from this module.
_FORMAT_TAG = "unchained/1"


class UnchainedError(Exception):
    """Base class of all errors raised by this package.

    Args:
        message (:obj:`str`):
            Human readable description.

        witness (:obj:`object`, optional):
            JSON-serializable evidence of the failure.

            Default: :obj:`None`
    """

    exit_code = 1

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_json(self) -> dict:
        return {
            "format": _FORMAT_TAG,
            "error": type(self).__name__,
            "message": self.message,
            "witness": self.witness,
        }


# ------------------------------------------------------------------------------
#   Caps and parsing
# ------------------------------------------------------------------------------


class SizeCapExceeded(UnchainedError):
    exit_code = 3


class ParseError(UnchainedError):
    exit_code = 4


# ------------------------------------------------------------------------------
#   Plumbing errors on finite sets and functions
# ------------------------------------------------------------------------------


class DomainMismatch(UnchainedError, ValueError):
    """Composition or copairing of functions whose (co)domains do not fit."""


class ElementNotFound(UnchainedError, KeyError):
    """An element is not a member of the finite set it was looked up in."""

    def __str__(self):
        return self.message


# ------------------------------------------------------------------------------
#   Verification failures
# ------------------------------------------------------------------------------


class VerificationError(UnchainedError):
    """A categorical property that was asked for does not hold."""

    exit_code = 2


class NotACocone(VerificationError):
    pass


class NoFactorization(VerificationError):
    pass


class NoMerge(VerificationError):
    pass


class NotCoalgebraMorphism(VerificationError):
    pass


class NotMorphism(VerificationError):
    pass


class NotRecursive(VerificationError):
    """The successor graph has a cycle. ``witness`` holds the cycle."""


class HypothesisFailed(VerificationError):
    """``witness`` names the violated equation and the offending element."""


class UniquenessFailed(VerificationError):
    pass


class NotInverse(VerificationError):
    pass


class NotBijective(VerificationError):
    pass


class RecursivenessFailed(VerificationError):
    pass


class MorphismFailed(VerificationError):
    pass


class NoTriangle(VerificationError):
    pass


class IndependenceFailed(VerificationError):
    pass


class PartitionMismatch(VerificationError):
    pass
