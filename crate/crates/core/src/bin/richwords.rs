fn main() {
    richwords::cli::main()
}
