"""Hermitian modular forms of degree two: expansions, lifts, pullbacks and divisors"""
