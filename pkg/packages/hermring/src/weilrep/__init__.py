"""Finite quadratic modules, Weil representations and vector-valued modular forms"""
