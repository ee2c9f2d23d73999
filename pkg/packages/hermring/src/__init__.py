"""hermring - Hermitian modular forms of degree two over Q(sqrt -7) and Q(sqrt -11)"""
