namespace wmin {
}
