"""Graded rings of symmetric Hermitian modular forms: generators, relations and Hilbert series"""
