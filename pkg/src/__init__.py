"""Finite ring toolkit for quasinilpotent elements and qnil-duo rings."""

__version__ = "0.1.0"
