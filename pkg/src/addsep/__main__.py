from addsep.cli import main

main()
