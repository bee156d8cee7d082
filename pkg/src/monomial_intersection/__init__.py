"""Monomiale Ideale vom Schnitt-Typ: exakte Bibliothek und Kommandozeile."""

__version__ = "0.1.0"
