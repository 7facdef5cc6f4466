"""Utils module"""
