"""Pydantic schemas for the project config and ledger headers"""
