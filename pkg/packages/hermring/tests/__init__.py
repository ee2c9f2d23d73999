"""Test suite for hermring"""
