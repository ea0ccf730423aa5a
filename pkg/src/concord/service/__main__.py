from concord.service.app import main

main()
