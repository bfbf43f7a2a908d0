namespace altk {}
