"""Dependencies package"""
