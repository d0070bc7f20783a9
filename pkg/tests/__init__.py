# Module initialization
