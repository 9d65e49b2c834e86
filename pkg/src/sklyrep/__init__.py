"""Representation-theoretic toolkit for the Sklyanin algebras S(1,1,c) and C_{-1}[x,y]."""

__version__ = "0.1.0"
