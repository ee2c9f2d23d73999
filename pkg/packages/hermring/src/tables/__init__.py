"""Golden data tables transcribed from the printed results"""
