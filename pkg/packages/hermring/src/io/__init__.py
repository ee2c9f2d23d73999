"""Ledger reading and writing"""
