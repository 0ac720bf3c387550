"""Helpers shared by the purelog test modules"""
