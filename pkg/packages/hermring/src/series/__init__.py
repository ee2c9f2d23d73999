"""Exact truncated power series, classical modular forms and Hilbert series"""
