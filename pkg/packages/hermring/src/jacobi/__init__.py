"""Jacobi forms, Gritsenko lifts and paramodular generator catalogs"""
