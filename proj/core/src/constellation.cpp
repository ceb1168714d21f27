namespace hmap {}
