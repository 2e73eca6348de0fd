from initalg.cli import main

main()
