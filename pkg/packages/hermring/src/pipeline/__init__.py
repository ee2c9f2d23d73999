"""Project configuration"""
