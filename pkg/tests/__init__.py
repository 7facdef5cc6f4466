"""Tests for the simplicial complex toolkit"""
