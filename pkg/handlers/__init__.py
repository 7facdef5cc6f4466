"""Handlers module"""
